"""
Módulo con los flujos aleatorios reproducibles del laboratorio.

Cada réplica obtiene su propio generador Philox (basado en contador) cuya llave
se deriva mezclando la semilla del experimento con el índice de la réplica.
Así el resultado de la réplica k no depende del orden de ejecución, del número
de procesos ni de cuántas réplicas se pidan en total.
"""

import numpy as np

MASK64 = 0xFFFFFFFFFFFFFFFF

# Etiquetas fijas para separar los lotes de un mismo experimento
STREAM_NULL_CALIBRATION = 0
STREAM_NULL_CHECK = 1
STREAM_ALTERNATIVE = 2
STREAM_NUISANCE = 0xA5


def splitmix64(value):
    """
    Paso de mezcla splitmix64 sobre un entero de 64 bits.

    Args:
        value (int): Estado de entrada (se reduce módulo 2^64)

    Returns:
        int: Valor mezclado en [0, 2^64)
    """
    z = (value + 0x9E3779B97F4A7C15) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def derive_seed(seed, *parts):
    """
    Deriva una sub-semilla de 64 bits a partir de la semilla y una secuencia de
    índices (celda, réplica, lote...). El orden de los índices importa.
    """
    state = splitmix64(int(seed) & MASK64)
    for part in parts:
        state = splitmix64(state ^ (int(part) & MASK64))
    return state


def make_generator(seed, rep_index):
    #Generador numpy para la réplica rep_index del flujo identificado por seed.
    key = derive_seed(seed, rep_index)
    return np.random.Generator(np.random.Philox(key=key))
