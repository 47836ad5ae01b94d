"""
Módulo con los certificados numéricos de indistinguibilidad del modelo directo.

Para cada coordenada se compara la ley nula de W = -2 log p (chi-cuadrado con
2 grados de libertad) con la mezcla (1 - eps) nula + eps (mu + sigma Z)^2. La
distancia de Hellinger cuadrada (convención 1/2) se integra con scipy y luego se
tensoriza a las n coordenadas para acotar la variación total y el riesgo.
"""

import logging
import math
import warnings

import numpy as np
from scipy import integrate, stats

from src.models.results import HellingerReport
from src.utils.errors import DomainError, NumericalError

logger = logging.getLogger(__name__)

QUAD_TOLERANCE = 1e-10
QUAD_LIMIT = 200

LOG_SQRT_2PI = 0.5 * math.log(2.0 * math.pi)

# Más allá de este punto ambas densidades (en t = sqrt(w)) son despreciables
TAIL_SIGMAS = 40.0


def nonnull_logp_density(w, mu, sigma):
    """
    Densidad de W = (mu + sigma Z)^2 evaluada en w > 0.

    Args:
        w (float): Punto de evaluación, > 0
        mu (float): Centro de la normal latente
        sigma (float): Escala, > 0

    Returns:
        float: [phi((sqrt(w) - mu) / sigma) + phi((sqrt(w) + mu) / sigma)] / (2 sigma sqrt(w))
    """
    if not w > 0:
        raise DomainError(f"w debe ser positivo, se recibió {w}", field="w")
    if not sigma > 0:
        raise DomainError(f"sigma debe ser positivo, se recibió {sigma}", field="sigma")
    root = math.sqrt(w)
    density = stats.norm.pdf((root - mu) / sigma) + stats.norm.pdf((root + mu) / sigma)
    return float(density / (2.0 * sigma * root))


def _log_null_t(t):
    #log de la densidad nula en t = sqrt(w): t exp(-t^2 / 2).
    return np.log(t) - 0.5 * t * t


def _log_nonnull_t(t, mu, sigma):
    #log de la densidad de |mu + sigma Z| en t.
    upper = -0.5 * ((t - mu) / sigma) ** 2
    lower = -0.5 * ((t + mu) / sigma) ** 2
    return np.logaddexp(upper, lower) - LOG_SQRT_2PI - math.log(sigma)


def _integrand(t, eps, mu, sigma):
    """
    Integrando no negativo de h2 en la variable t = sqrt(w).

    Con L = g / f0 y s = sqrt(1 + eps (L - 1)) = sqrt(f1 / f0), y usando que f0
    y g integran 1, h2 = int eps (g - f0) (s - 1) / (2 (s + 1)) dt, donde
    (s - 1) / (s + 1) = tanh(log(s) / 2). El integrando nunca es negativo y se
    evalúa en escala log para que L enorme no desborde.
    """
    with np.errstate(divide="ignore", over="ignore", under="ignore"):
        log_f0 = _log_null_t(t)
        log_g = _log_nonnull_t(t, mu, sigma)
        log_ratio = log_g - log_f0
        log_mixture = np.logaddexp(math.log1p(-eps) if eps < 1 else -np.inf,
                                   math.log(eps) + log_ratio)
        shrink = np.tanh(0.25 * log_mixture)
        return 0.5 * eps * (np.exp(log_g) - np.exp(log_f0)) * shrink


def _breakpoints(mu, sigma):
    #Paneles log-espaciados cerca de 0 y cortes alrededor del pico mu.
    upper = max(mu, 1.0) + TAIL_SIGMAS * max(sigma, 1.0)
    points = set(np.geomspace(1e-12, 1.0, 13).tolist())
    points.update([1.0, 2.0, 4.0, 8.0])
    for k in (-6.0, -2.0, 0.0, 2.0, 6.0):
        points.add(mu + k * sigma)
    return [0.0] + sorted(p for p in points if 0.0 < p < upper) + [upper]


def hellinger2_coordinate(cal, epsilon=None):
    """
    Distancia de Hellinger cuadrada (convención 1/2) entre la ley nula de una
    coordenada y la mezcla del modelo directo.

    h2 = 1 - int sqrt(f0 f1) dw con f0 = chi-cuadrado de 2 grados de libertad y
    f1 = (1 - eps) f0 + eps (densidad de (mu_n + sigma Z)^2).

    Args:
        cal (Calibration): Calibración (n, beta, r, sigma)
        epsilon (float, optional): Fracción de mezcla; por defecto eps_n

    Returns:
        tuple: (h2, error estimado de la cuadratura)

    Raises:
        NumericalError: Si la cuadratura no converge; partial lleva (h2, error)
    """
    eps = cal.eps_n if epsilon is None else float(epsilon)
    if not 0.0 <= eps <= 1.0:
        raise DomainError(f"epsilon debe estar en [0, 1], se recibió {epsilon}", field="epsilon")
    if eps == 0.0:
        return 0.0, 0.0

    mu, sigma = cal.mu_n, cal.sigma
    points = _breakpoints(mu, sigma)
    total = 0.0
    error = 0.0
    for left, right in zip(points[:-1], points[1:]):
        with warnings.catch_warnings():
            warnings.simplefilter("error", integrate.IntegrationWarning)
            try:
                value, err = integrate.quad(_integrand, left, right, args=(eps, mu, sigma),
                                            epsabs=QUAD_TOLERANCE * 1e-3, epsrel=QUAD_TOLERANCE,
                                            limit=QUAD_LIMIT)
            except integrate.IntegrationWarning as e:
                raise NumericalError(f"la cuadratura no convergió en [{left:.3g}, {right:.3g}]: {e}",
                                     partial=(total, error)) from None
        total += value
        error += err

    if error > QUAD_TOLERANCE:
        raise NumericalError(f"error de cuadratura {error:.3g} mayor que {QUAD_TOLERANCE:g}",
                             partial=(total, error))
    h2 = min(max(total, 0.0), 1.0)
    logger.debug("h2 por coordenada para %s: %.6g (error %.2g)", cal, h2, error)
    return h2, error


def indistinguishability_bound(cal, heuristic=False, epsilon=None):
    """
    Cota inferior del riesgo (error tipo I + tipo II) de cualquier prueba con n
    coordenadas del modelo directo.

    Args:
        cal (Calibration): Calibración
        heuristic (bool, optional): Marca el reporte como heurístico (modelo no directo)
        epsilon (float, optional): Fracción de mezcla; por defecto eps_n

    Returns:
        HellingerReport: h2 por coordenada y total, cota de TV y riesgo
    """
    eps = cal.eps_n if epsilon is None else epsilon
    h2, error = hellinger2_coordinate(cal, epsilon=eps)
    report = HellingerReport(cal, eps, h2, error, heuristic=heuristic)
    if heuristic:
        logger.warning("La cota de Hellinger solo es exacta para el modelo directo; se reporta como heurística")
    return report
