"""
Módulo que contiene la clase PValueVector, la moneda común de todas las pruebas
"""

import numpy as np

from src.utils.errors import DomainError


class PValueVector:
    """
    Vector de n P-values, cada uno en (0, 1].

    Attributes:
        values (np.ndarray): P-values (copia de solo lectura)
    """

    def __init__(self, values, allow_zero=False):
        """
        Inicializa un nuevo vector de P-values.

        Args:
            values (array-like): P-values
            allow_zero (bool, optional): Aceptar P-values exactamente 0 (p. ej. por
                subdesbordamiento); los estadísticos deciden cómo tratarlos.
                Defaults to False.
        """
        arr = np.array(values, dtype=float, copy=True).ravel()
        if arr.size == 0:
            raise DomainError("el vector de P-values está vacío")
        lower_ok = arr >= 0 if allow_zero else arr > 0
        if np.any(np.isnan(arr)) or not np.all(lower_ok) or np.any(arr > 1):
            interval = "[0, 1]" if allow_zero else "(0, 1]"
            raise DomainError(f"todos los P-values deben estar en {interval}")
        arr.setflags(write=False)
        self.values = arr

    def __len__(self):
        return self.values.size

    def sorted(self):
        #Copia ordenada (orden estable) de los P-values.
        return np.sort(self.values, kind="stable")

    def __str__(self):
        return f"PValueVector(n={len(self)}, min={self.values.min():.3g})"

    def __repr__(self):
        return self.__str__()

    @classmethod
    def wrap(cls, values, allow_zero=False):
        #Acepta un PValueVector o cualquier secuencia de P-values.
        if isinstance(values, cls):
            return values
        return cls(values, allow_zero=allow_zero)
