"""
Módulo con los núcleos de distribuciones (colas, CDFs) sobre los que se apoyan
todos los demás módulos.

Todas las funciones aceptan escalares o arreglos de numpy y operan elemento a
elemento. Los cálculos se delegan en scipy.special, que evalúa la cola normal
con erfc (sin cancelación en la cola lejana) y la CDF de Poisson con la gamma
incompleta regularizada.
"""

import numpy as np
from scipy import special, stats

from src.utils.errors import DomainError


def _finite(x, name="x"):
    #Convierte a arreglo de float y verifica que todos los valores sean finitos.
    arr = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise DomainError(f"{name} debe ser finito, se recibió {x!r}")
    return arr


def _counts(k, name="k"):
    #Verifica que k sean conteos enteros no negativos.
    arr = np.asarray(k)
    as_float = np.asarray(arr, dtype=float)
    if not np.all(np.isfinite(as_float)) or np.any(as_float < 0) or np.any(as_float != np.floor(as_float)):
        raise DomainError(f"{name} debe ser un entero no negativo, se recibió {k!r}")
    return as_float


def _positive(lam, name="lam"):
    arr = np.asarray(lam, dtype=float)
    if not np.all(np.isfinite(arr)) or np.any(arr <= 0):
        raise DomainError(f"{name} debe ser positivo y finito, se recibió {lam!r}")
    return arr


def std_normal_sf(x):
    """
    Calcula la función de supervivencia de la normal estándar, Pr(Z > x).

    Args:
        x (float | np.ndarray): Punto(s) de evaluación, finitos

    Returns:
        float | np.ndarray: Probabilidad de cola superior
    """
    arr = _finite(x)
    return special.ndtr(-arr)


def std_normal_logsf(x):
    """
    Calcula log Pr(Z > x) sin pasar por la probabilidad, finito incluso cuando
    la cola se va por debajo del menor float representable.
    """
    arr = _finite(x)
    return special.log_ndtr(-arr)


def reg_inc_beta(x, a, b):
    """
    Función beta incompleta regularizada, Pr(Beta(a, b) <= x).

    Args:
        x (float | np.ndarray): Punto(s) en [0, 1]
        a (float | np.ndarray): Primer parámetro de forma, > 0
        b (float | np.ndarray): Segundo parámetro de forma, > 0

    Returns:
        float | np.ndarray: Valor de la CDF de la Beta
    """
    x_arr = _finite(x)
    if np.any(x_arr < 0) or np.any(x_arr > 1):
        raise DomainError(f"x debe estar en [0, 1], se recibió {x!r}")
    a_arr = _positive(a, "a")
    b_arr = _positive(b, "b")
    return special.betainc(a_arr, b_arr, x_arr)


def poisson_cdf(k, lam):
    """
    CDF de Poisson, Pr(Pois(lam) <= k).

    scipy.special.pdtr usa la identidad con la gamma incompleta regularizada,
    estable para lam grandes (hasta 1e6 y más).

    Args:
        k (int | np.ndarray): Conteo(s), enteros no negativos
        lam (float | np.ndarray): Media(s) positivas

    Returns:
        float | np.ndarray: Probabilidad acumulada
    """
    k_arr = _counts(k)
    lam_arr = _positive(lam)
    return special.pdtr(k_arr, lam_arr)


def poisson_sf(k, lam):
    #Cola superior estricta de Poisson, Pr(Pois(lam) > k), calculada sin restar de 1.
    k_arr = _counts(k)
    lam_arr = _positive(lam)
    return special.pdtrc(k_arr, lam_arr)


def poisson_pmf(k, lam):
    #Masa de Poisson en k.
    k_arr = _counts(k)
    lam_arr = _positive(lam)
    return stats.poisson.pmf(k_arr, lam_arr)


def binomial_two_sided_pvalue(x, y):
    """
    P-value exacto de asignación binomial para dos conteos.

    Con N = x + y y d = |x - y| / 2 devuelve Pr(|Bin(N, 1/2) - N/2| >= d),
    sumando la masa binomial de ambas colas. El evento incluye el punto de masa
    que alcanza d exactamente. Con N = 0 (o d = 0) el resultado es 1.

    Args:
        x (int | np.ndarray): Primer conteo
        y (int | np.ndarray): Segundo conteo

    Returns:
        float | np.ndarray: P-value en (0, 1]
    """
    x_arr = _counts(x, "x")
    y_arr = _counts(y, "y")
    total = x_arr + y_arr
    low = np.minimum(x_arr, y_arr)
    high = np.maximum(x_arr, y_arr)

    # Pr(B <= min) + Pr(B >= max); las colas se solapan cuando x == y
    pvalue = stats.binom.cdf(low, total, 0.5) + stats.binom.sf(high - 1, total, 0.5)
    pvalue = np.where(low == high, 1.0, np.minimum(pvalue, 1.0))
    if pvalue.ndim == 0:
        return float(pvalue)
    return pvalue
