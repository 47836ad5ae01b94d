"""
Módulo con las curvas teóricas de transición de fase y el exponente de
desviación moderada.

Todas son funciones puras de (beta, sigma) o (q, r, sigma).
"""

import math

from src.models.calibration import PhasePoint
from src.utils.errors import DomainError

# Tipos de curva (CurveKind)
ONE_SAMPLE = "one-sample"
BONFERRONI = "bonferroni"
TWO_SAMPLE = "two-sample"
BONFERRONI_TWO_SAMPLE = "bonferroni-two-sample"

CURVE_KINDS = (ONE_SAMPLE, BONFERRONI, TWO_SAMPLE, BONFERRONI_TWO_SAMPLE)

# Regiones del plano (beta, r)
UNDETECTABLE = "undetectable"
DETECTABLE = "detectable"
BOUNDARY = "boundary"

CLASSIFY_TOL = 1e-9


def _check_domain(beta, sigma, closed_left=False):
    if not (math.isfinite(beta) and math.isfinite(sigma)):
        raise DomainError(f"beta y sigma deben ser finitos, se recibió ({beta}, {sigma})")
    lower_ok = beta >= 0.5 if closed_left else beta > 0.5
    if not (lower_ok and beta < 1):
        raise DomainError(f"beta debe estar en (1/2, 1), se recibió {beta}")
    if sigma <= 0:
        raise DomainError(f"sigma debe ser positivo, se recibió {sigma}")


def _squared_branch(beta, sigma):
    return (1.0 - sigma * math.sqrt(1.0 - beta)) ** 2


def _rho(beta, sigma):
    s2 = sigma * sigma
    if s2 < 2:
        if beta < 1 - s2 / 4:
            return (2 - s2) * (beta - 0.5)
        return _squared_branch(beta, sigma)
    if beta < 1 - 1 / s2:
        return 0.0
    return _squared_branch(beta, sigma)


def _rho_bonf(beta, sigma):
    s2 = sigma * sigma
    # sigma^2 = 2 queda en la rama no nula (continuidad)
    if s2 > 2 and beta < 1 - 1 / s2:
        return 0.0
    return _squared_branch(beta, sigma)


def _two_sample_sigma(sigma):
    return math.sqrt((1 + sigma * sigma) / 2)


def _rho_two_sample(beta, sigma):
    return 2.0 * _rho(beta, _two_sample_sigma(sigma))


def _rho_bonf_two_sample(beta, sigma):
    return 2.0 * _rho_bonf(beta, _two_sample_sigma(sigma))


def rho(beta, sigma):
    """
    Curva óptima de transición de fase de una muestra, rho(beta; sigma).

    Por debajo de esta curva todas las pruebas son asintóticamente impotentes;
    por encima HC y BJ son asintóticamente potentes.

    Args:
        beta (float): Parámetro de rareza en (1/2, 1)
        sigma (float): Parámetro de escala, > 0

    Returns:
        float: Intensidad r de la frontera (no negativa)
    """
    _check_domain(beta, sigma)
    return _rho(beta, sigma)


def rho_bonf(beta, sigma):
    """
    Frontera de las pruebas de Bonferroni (min-P) y FDR.

    Args:
        beta (float): Parámetro de rareza en (1/2, 1)
        sigma (float): Parámetro de escala, > 0

    Returns:
        float: Intensidad r de la frontera
    """
    _check_domain(beta, sigma)
    return _rho_bonf(beta, sigma)


def rho_two_sample(beta, sigma):
    """
    Curva óptima del modelo normal de dos muestras.

    Se evalúa como 2 * rho(beta, sqrt((1 + sigma^2) / 2)): la media efectiva se
    reduce por 1/sqrt(2) y la desviación efectiva es sqrt((1 + sigma^2) / 2).
    """
    _check_domain(beta, sigma)
    return _rho_two_sample(beta, sigma)


def rho_bonf_two_sample(beta, sigma):
    #Frontera de Bonferroni con la misma sustitución de dos muestras.
    _check_domain(beta, sigma)
    return _rho_bonf_two_sample(beta, sigma)


_CURVES = {
    ONE_SAMPLE: _rho,
    BONFERRONI: _rho_bonf,
    TWO_SAMPLE: _rho_two_sample,
    BONFERRONI_TWO_SAMPLE: _rho_bonf_two_sample,
}


def curve_value(kind, beta, sigma):
    """
    Evalúa la curva indicada, extendida por continuidad a beta = 1/2.

    Args:
        kind (str): Uno de CURVE_KINDS
        beta (float): Parámetro de rareza en [1/2, 1)
        sigma (float): Parámetro de escala, > 0

    Returns:
        float: Valor de la curva
    """
    if kind not in _CURVES:
        raise DomainError(f"tipo de curva desconocido: {kind!r}")
    _check_domain(beta, sigma, closed_left=True)
    return _CURVES[kind](beta, sigma)


def bonferroni_optimal_from(sigma, two_sample=False):
    """
    Menor beta a partir del cual la frontera de Bonferroni coincide con la óptima.

    Args:
        sigma (float): Parámetro de escala, > 0
        two_sample (bool, optional): Usar la sustitución de dos muestras. Defaults to False.

    Returns:
        float: 1 - sigma^2 / 4 si sigma^2 < 2, y 1/2 en otro caso
    """
    if not math.isfinite(sigma) or sigma <= 0:
        raise DomainError(f"sigma debe ser positivo, se recibió {sigma}")
    if two_sample:
        sigma = _two_sample_sigma(sigma)
    s2 = sigma * sigma
    return 1 - s2 / 4 if s2 < 2 else 0.5


def alpha_exponent(q, r, sigma):
    """
    Exponente de desviación moderada alpha(q; r, sigma) = ((sqrt(q) - sqrt(r)) / sigma)^2.

    Pr(p_i < n^-q) decae como n^-alpha para una coordenada que se desvía.
    """
    if q < 0 or r < 0:
        raise DomainError(f"q y r deben ser no negativos, se recibió q={q}, r={r}")
    if sigma <= 0:
        raise DomainError(f"sigma debe ser positivo, se recibió {sigma}")
    return ((math.sqrt(q) - math.sqrt(r)) / sigma) ** 2


def hc_null_level(n):
    #Nivel asintótico sqrt(4 log log n) de HC bajo la nula.
    if n < 3:
        raise DomainError(f"hc_null_level requiere n >= 3, se recibió {n}")
    return math.sqrt(4 * math.log(math.log(n)))


def classify(point, curve=ONE_SAMPLE):
    """
    Clasifica un punto del diagrama de fase respecto de una curva.

    Args:
        point (PhasePoint): Punto (beta, r, sigma)
        curve (str): Tipo de curva

    Returns:
        str: UNDETECTABLE, DETECTABLE o BOUNDARY
    """
    if not isinstance(point, PhasePoint):
        raise DomainError(f"se esperaba un PhasePoint, se recibió {point!r}")
    if curve not in _CURVES:
        raise DomainError(f"tipo de curva desconocido: {curve!r}")
    _check_domain(point.beta, point.sigma)
    value = _CURVES[curve](point.beta, point.sigma)
    if point.r < value - CLASSIFY_TOL:
        return UNDETECTABLE
    if point.r > value + CLASSIFY_TOL:
        return DETECTABLE
    return BOUNDARY
