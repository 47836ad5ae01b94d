"""
Módulo que contiene las clases ExperimentConfig y ScanConfig, los documentos de
configuración ya validados.
"""

import hashlib
import json
import numbers

from src.gof_tests import statistic_from_dict
from src.models.calibration import Calibration
from src.models.model_spec import ModelSpec
from src.utils.errors import ConfigError, DomainError

DEFAULT_ALPHA = 0.05
DEFAULT_REPS = 2000
DEFAULT_SEED = 0
MIN_REPS = 100

EXPERIMENT_KEYS = ("model", "n", "beta", "r", "sigma", "stat", "alpha", "reps_null", "reps_alt", "seed")
SCAN_KEYS = ("model", "n", "sigma", "beta_grid", "r_grid", "stats", "alpha", "reps_null", "reps_alt", "seed")


def config_digest(data):
    #Primeros 16 dígitos hex del SHA-256 del JSON canónico.
    canonical = json.dumps(data, sort_keys=True, separators=(",", ":"), ensure_ascii=True)
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()[:16]


def check_alpha(alpha, field="alpha"):
    if isinstance(alpha, bool) or not isinstance(alpha, numbers.Real) or not 0 < alpha < 1:
        raise ConfigError(f"debe estar en (0, 1), se recibió {alpha!r}", field=field)
    return float(alpha)


def check_reps(reps, field):
    if isinstance(reps, bool) or not isinstance(reps, numbers.Integral) or reps < MIN_REPS:
        raise ConfigError(f"se requieren al menos {MIN_REPS} réplicas, se recibió {reps!r}", field=field)
    return int(reps)


def check_seed(seed, field="seed"):
    if isinstance(seed, bool) or not isinstance(seed, numbers.Integral) or not 0 <= seed < 2 ** 64:
        raise ConfigError(f"debe ser un entero de 64 bits sin signo, se recibió {seed!r}", field=field)
    return int(seed)


def _reject_unknown(data, allowed):
    if not isinstance(data, dict):
        raise ConfigError("el documento debe ser un objeto JSON")
    unknown = sorted(set(data) - set(allowed))
    if unknown:
        raise ConfigError(f"llaves desconocidas: {unknown}", field=unknown[0])


def _require(data, keys):
    for key in keys:
        if key not in data:
            raise ConfigError("campo obligatorio", field=key)


class ExperimentConfig:
    """
    Clase que representa un experimento de potencia completo.

    Attributes:
        model (ModelSpec): Modelo generador
        cal (Calibration): Calibración (n, beta, r, sigma)
        stat (BaseStatistic): Estadístico a evaluar
        alpha (float): Nivel nominal en (0, 1)
        reps_null (int): Réplicas nulas para calibrar el umbral (y para el lote de control)
        reps_alt (int): Réplicas bajo la alternativa
        seed (int): Semilla de 64 bits
    """

    def __init__(self, model, cal, stat, alpha=DEFAULT_ALPHA, reps_null=DEFAULT_REPS,
                 reps_alt=DEFAULT_REPS, seed=DEFAULT_SEED):
        self.model = model
        self.cal = cal
        self.stat = stat
        self.alpha = check_alpha(alpha)
        self.reps_null = check_reps(reps_null, "reps_null")
        self.reps_alt = check_reps(reps_alt, "reps_alt")
        self.seed = check_seed(seed)

    def with_cell(self, beta, r, stat, seed):
        #Copia del experimento para una celda del diagrama de fase.
        return ExperimentConfig(self.model, self.cal.with_cell(beta, r), stat, self.alpha,
                                self.reps_null, self.reps_alt, seed)

    def to_dict(self):
        """Forma normalizada (con los valores por defecto aplicados)."""
        return {
            "model": self.model.to_dict(),
            "n": self.cal.n,
            "beta": self.cal.beta,
            "r": self.cal.r,
            "sigma": self.cal.sigma,
            "stat": self.stat.to_dict(),
            "alpha": self.alpha,
            "reps_null": self.reps_null,
            "reps_alt": self.reps_alt,
            "seed": self.seed,
        }

    def digest(self):
        return config_digest(self.to_dict())

    def __eq__(self, other):
        if not isinstance(other, ExperimentConfig):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def __str__(self):
        return f"ExperimentConfig({self.model.kind}, {self.cal}, {self.stat}, alpha={self.alpha})"

    def __repr__(self):
        return self.__str__()

    @classmethod
    def from_dict(cls, data):
        """
        Crea un experimento desde un documento ya decodificado.

        Raises:
            ConfigError: Llave desconocida, campo faltante o valor fuera de dominio
        """
        _reject_unknown(data, EXPERIMENT_KEYS)
        _require(data, ("model", "n", "beta", "r", "stat"))
        model = ModelSpec.from_dict(data["model"])
        cal = make_calibration(data["n"], data["beta"], data["r"], data.get("sigma", 1.0))
        stat = statistic_from_dict(data["stat"])
        return cls(model, cal, stat,
                   alpha=data.get("alpha", DEFAULT_ALPHA),
                   reps_null=data.get("reps_null", DEFAULT_REPS),
                   reps_alt=data.get("reps_alt", DEFAULT_REPS),
                   seed=data.get("seed", DEFAULT_SEED))


class ScanConfig:
    """
    Clase que representa un barrido del diagrama de fase sobre una grilla (beta, r).

    Attributes:
        model (ModelSpec): Modelo generador
        n (int): Número de características
        sigma (float): Escala
        beta_grid (list): Valores de beta
        r_grid (list): Valores de r
        stats (list): Estadísticos a evaluar en cada celda
        alpha, reps_null, reps_alt, seed: Como en ExperimentConfig
    """

    def __init__(self, model, n, sigma, beta_grid, r_grid, stats, alpha=DEFAULT_ALPHA,
                 reps_null=DEFAULT_REPS, reps_alt=DEFAULT_REPS, seed=DEFAULT_SEED):
        self.model = model
        # Se valida n y sigma con una calibración de prueba
        make_calibration(n, 0.5, 0.0, sigma)
        self.n = int(n)
        self.sigma = float(sigma)
        self.beta_grid = _check_grid(beta_grid, "beta_grid", lambda b: 0 < b < 1)
        self.r_grid = _check_grid(r_grid, "r_grid", lambda r: r >= 0)
        if not stats:
            raise ConfigError("se requiere al menos un estadístico", field="stats")
        self.stats = list(stats)
        self.alpha = check_alpha(alpha)
        self.reps_null = check_reps(reps_null, "reps_null")
        self.reps_alt = check_reps(reps_alt, "reps_alt")
        self.seed = check_seed(seed)

    def to_dict(self):
        return {
            "model": self.model.to_dict(),
            "n": self.n,
            "sigma": self.sigma,
            "beta_grid": list(self.beta_grid),
            "r_grid": list(self.r_grid),
            "stats": [stat.to_dict() for stat in self.stats],
            "alpha": self.alpha,
            "reps_null": self.reps_null,
            "reps_alt": self.reps_alt,
            "seed": self.seed,
        }

    def digest(self):
        return config_digest(self.to_dict())

    def __str__(self):
        return (f"ScanConfig({self.model.kind}, n={self.n}, "
                f"{len(self.beta_grid)}x{len(self.r_grid)}x{len(self.stats)})")

    def __repr__(self):
        return self.__str__()

    @classmethod
    def from_dict(cls, data):
        #Las grillas deben llegar ya expandidas a listas.
        _reject_unknown(data, SCAN_KEYS)
        _require(data, ("model", "n", "beta_grid", "r_grid", "stats"))
        stats = data["stats"]
        if isinstance(stats, str):
            stats = [stats]
        if not isinstance(stats, list):
            raise ConfigError("se esperaba una lista de estadísticos", field="stats")
        return cls(ModelSpec.from_dict(data["model"]), data["n"], data.get("sigma", 1.0),
                   data["beta_grid"], data["r_grid"], [statistic_from_dict(item) for item in stats],
                   alpha=data.get("alpha", DEFAULT_ALPHA),
                   reps_null=data.get("reps_null", DEFAULT_REPS),
                   reps_alt=data.get("reps_alt", DEFAULT_REPS),
                   seed=data.get("seed", DEFAULT_SEED))


def make_calibration(n, beta, r, sigma):
    #Construye la calibración traduciendo errores de dominio a errores de configuración.
    try:
        return Calibration(n, beta, r, sigma)
    except DomainError as e:
        raise ConfigError(str(e), field=e.field) from None


def _check_grid(values, field, accept):
    if not isinstance(values, (list, tuple)) or not values:
        raise ConfigError("la grilla debe ser una lista no vacía", field=field)
    grid = []
    for value in values:
        if isinstance(value, bool) or not isinstance(value, numbers.Real) or not accept(value):
            raise ConfigError(f"valor fuera de dominio: {value!r}", field=field)
        grid.append(float(value))
    return grid