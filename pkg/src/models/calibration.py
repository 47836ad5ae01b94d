"""
Módulo que contiene las clases Calibration y PhasePoint
"""

import logging
import math
import numbers

from src.utils.errors import DomainError

logger = logging.getLogger(__name__)


def _require_finite(name, value):
    try:
        value = float(value)
    except (TypeError, ValueError):
        raise DomainError(f"{name} debe ser numérico, se recibió {value!r}", field=name) from None
    if not math.isfinite(value):
        raise DomainError(f"{name} debe ser finito, se recibió {value!r}", field=name)
    return value


class Calibration:
    """
    Clase que representa la calibración (n, beta, r, sigma) del modelo raro/débil.

    Attributes:
        n (int): Número de características (P-values)
        beta (float): Parámetro de rareza en (0, 1)
        r (float): Parámetro de intensidad, >= 0
        sigma (float): Escala de la normal latente bajo la alternativa, > 0
        eps_n (float): Fracción esperada de características que se desvían, n^-beta
        mu_n (float): Parámetro de no centralidad, sqrt(2 r log n)
    """

    def __init__(self, n, beta, r, sigma=1.0):
        """
        Inicializa una nueva calibración.

        Args:
            n (int): Número de características, >= 1
            beta (float): Parámetro de rareza en (0, 1)
            r (float): Parámetro de intensidad, >= 0
            sigma (float, optional): Parámetro de escala. Defaults to 1.0.
        """
        if isinstance(n, bool) or not isinstance(n, numbers.Real) or not math.isfinite(n) or int(n) != n or n < 1:
            raise DomainError(f"n debe ser un entero positivo, se recibió {n!r}", field="n")
        self.n = int(n)
        self.beta = _require_finite("beta", beta)
        self.r = _require_finite("r", r)
        self.sigma = _require_finite("sigma", sigma)

        if not 0 < self.beta < 1:
            raise DomainError(f"beta debe estar en (0, 1), se recibió {beta}", field="beta")
        if self.r < 0:
            raise DomainError(f"r debe ser no negativo, se recibió {r}", field="r")
        if self.sigma <= 0:
            raise DomainError(f"sigma debe ser positivo, se recibió {sigma}", field="sigma")
        if self.n == 1:
            # Con n = 1 la alternativa degenera (eps_n = 1, mu_n = 0); solo sirve
            # para calibraciones bajo la nula
            logger.debug("Calibración con n = 1: la alternativa coincide con la nula")

    @property
    def eps_n(self):
        #Probabilidad de desviación por característica.
        return self.n ** (-self.beta)

    @property
    def mu_n(self):
        #Parámetro de no centralidad calibrado.
        return math.sqrt(2.0 * self.r * math.log(self.n))

    @property
    def log_n(self):
        return math.log(self.n)

    def expected_departures(self):
        #Número esperado de características que se desvían, n * eps_n.
        return self.n * self.eps_n

    def with_cell(self, beta, r):
        """
        Crea una copia de la calibración con otra celda (beta, r) del diagrama.

        Args:
            beta (float): Nuevo parámetro de rareza
            r (float): Nueva intensidad

        Returns:
            Calibration: Nueva calibración con los mismos n y sigma
        """
        return Calibration(self.n, beta, r, self.sigma)

    def to_dict(self):
        return {"n": self.n, "beta": self.beta, "r": self.r, "sigma": self.sigma}

    def __eq__(self, other):
        if not isinstance(other, Calibration):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def __hash__(self):
        return hash((self.n, self.beta, self.r, self.sigma))

    def __str__(self):
        """Representación en cadena de la calibración."""
        return f"Calibration(n={self.n}, beta={self.beta}, r={self.r}, sigma={self.sigma})"

    def __repr__(self):
        return self.__str__()

    @classmethod
    def from_dict(cls, data):
        """
        Crea una calibración a partir de un diccionario con las llaves
        n, beta, r y (opcional) sigma.
        """
        return cls(data["n"], data["beta"], data["r"], data.get("sigma", 1.0))


class PhasePoint:
    """
    Punto (beta, r, sigma) del diagrama de fase.

    Attributes:
        beta (float): Rareza en (1/2, 1)
        r (float): Intensidad, >= 0
        sigma (float): Escala, > 0
    """

    def __init__(self, beta, r, sigma=1.0):
        self.beta = _require_finite("beta", beta)
        self.r = _require_finite("r", r)
        self.sigma = _require_finite("sigma", sigma)
        if not 0.5 < self.beta < 1:
            raise DomainError(f"beta debe estar en (1/2, 1), se recibió {beta}", field="beta")
        if self.r < 0:
            raise DomainError(f"r debe ser no negativo, se recibió {r}", field="r")
        if self.sigma <= 0:
            raise DomainError(f"sigma debe ser positivo, se recibió {sigma}", field="sigma")

    def __str__(self):
        return f"PhasePoint(beta={self.beta}, r={self.r}, sigma={self.sigma})"

    def __repr__(self):
        return self.__str__()
