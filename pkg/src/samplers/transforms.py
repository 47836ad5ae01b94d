"""
Módulo con las transformaciones de datos a P-values de cada modelo.

Todas aceptan escalares o arreglos de numpy.
"""

import math

import numpy as np

from src.utils.errors import DomainError
from src.utils.special_fn import (
    binomial_two_sided_pvalue,
    poisson_pmf,
    poisson_sf,
    std_normal_sf,
)

SQRT2 = math.sqrt(2.0)


def _scalar_or_array(values):
    values = np.asarray(values, dtype=float)
    if values.ndim == 0:
        return float(values)
    return values


def pvalue_one_sample_normal(x):
    #Prueba z de una cola: p = Pr(N(0,1) > x).
    return _scalar_or_array(std_normal_sf(x))


def pvalue_two_sample_normal(x, y):
    """
    P-value bilateral de la diferencia de dos normales con varianza 1.

    p = min(1, 2 * Pr(N(0,1) > |y - x| / sqrt(2))), exactamente uniforme bajo la nula.

    Args:
        x (float | np.ndarray): Primera muestra
        y (float | np.ndarray): Segunda muestra

    Returns:
        float | np.ndarray: P-value(s)
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if not (np.all(np.isfinite(x)) and np.all(np.isfinite(y))):
        raise DomainError("x e y deben ser finitos")
    return _scalar_or_array(np.minimum(1.0, 2.0 * std_normal_sf(np.abs(y - x) / SQRT2)))


def pvalue_poisson_randomized(x, lam, u):
    """
    P-value aleatorizado de cola superior para un conteo de Poisson.

    p = Pr(Pois(lam) > x) + u * Pr(Pois(lam) = x), exactamente uniforme cuando
    x ~ Pois(lam) y u ~ Unif[0, 1) son independientes.

    Args:
        x (int | np.ndarray): Conteo(s)
        lam (float | np.ndarray): Media(s) bajo la nula
        u (float | np.ndarray): Variable de aleatorización en [0, 1)

    Returns:
        float | np.ndarray: P-value(s)
    """
    u = np.asarray(u, dtype=float)
    if np.any(np.isnan(u)) or np.any(u < 0) or np.any(u >= 1):
        raise DomainError(f"u debe estar en [0, 1), se recibió {u!r}")
    return _scalar_or_array(poisson_sf(x, lam) + u * poisson_pmf(x, lam))


def pvalue_two_sample_poisson(x, y, method="vst"):
    """
    P-value de dos conteos de Poisson con media común desconocida.

    Args:
        x (int | np.ndarray): Conteo de la primera muestra
        y (int | np.ndarray): Conteo de la segunda muestra
        method (str): "vst" (estabilización de varianza, bilateral) o
            "binomial" (prueba binomial exacta de asignación)

    Returns:
        float | np.ndarray: P-value(s)
    """
    if method == "binomial":
        return binomial_two_sided_pvalue(x, y)
    if method != "vst":
        raise DomainError(f"método desconocido: {method!r}")
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if np.any(x < 0) or np.any(y < 0):
        raise DomainError("los conteos deben ser no negativos")
    diff = np.abs(np.sqrt(2.0 * y) - np.sqrt(2.0 * x))
    return _scalar_or_array(np.minimum(1.0, 2.0 * std_normal_sf(diff)))


def departure_tail_probability(q, cal):
    """
    Probabilidad exacta de que una coordenada que se desvía (modelo directo)
    tenga -2 log p > 2 q log n, es decir Pr(|mu_n + sigma Z| > sqrt(2 q log n)).

    Args:
        q (float): Exponente, > 0
        cal (Calibration): Calibración

    Returns:
        float: Probabilidad
    """
    if q <= 0:
        raise DomainError(f"q debe ser positivo, se recibió {q}")
    t = math.sqrt(2.0 * q * cal.log_n)
    upper = std_normal_sf((t - cal.mu_n) / cal.sigma)
    lower = std_normal_sf((t + cal.mu_n) / cal.sigma)
    return float(upper + lower)
