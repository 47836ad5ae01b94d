"""
Módulo de estadísticos de prueba global sobre vectores de P-values
"""

from src.gof_tests.base_statistic import BaseStatistic
from src.gof_tests.berk_jones import BerkJones
from src.gof_tests.fdr_min import FdrMin
from src.gof_tests.fisher import Fisher
from src.gof_tests.higher_criticism import DEFAULT_GAMMA0, HigherCriticism
from src.gof_tests.min_pvalue import MinPValue
from src.utils.errors import ConfigError, DomainError

STATISTICS = {
    "hc": HigherCriticism,
    "bj": BerkJones,
    "minp": MinPValue,
    "fdr": FdrMin,
    "fisher": Fisher,
}

STAT_NAMES = tuple(STATISTICS)


def create_statistic(name, gamma0=None):
    """
    Crea un estadístico a partir de su nombre en la configuración.

    Args:
        name (str): "hc", "bj", "minp", "fdr" o "fisher"
        gamma0 (float, optional): Fracción de estadísticos de orden de HC

    Returns:
        BaseStatistic: Instancia del estadístico
    """
    if name not in STATISTICS:
        raise ConfigError(f"estadístico desconocido: {name!r}", field="stat")
    if name == "hc":
        try:
            return HigherCriticism(DEFAULT_GAMMA0 if gamma0 is None else gamma0)
        except (DomainError, TypeError, ValueError) as e:
            raise ConfigError(str(e), field="stat.gamma0") from None
    if gamma0 is not None:
        raise ConfigError("gamma0 solo aplica a hc", field="stat.gamma0")
    return STATISTICS[name]()


def statistic_from_dict(data):
    #Acepta "hc" o {"kind": "hc", "gamma0": 0.1}.
    if isinstance(data, str):
        return create_statistic(data)
    if not isinstance(data, dict):
        raise ConfigError("se esperaba un texto o un objeto", field="stat")
    unknown = set(data) - {"kind", "gamma0"}
    if unknown:
        raise ConfigError(f"llaves desconocidas: {sorted(unknown)}", field="stat")
    if "kind" not in data:
        raise ConfigError("falta el tipo de estadístico", field="stat.kind")
    return create_statistic(data["kind"], data.get("gamma0"))


def evaluate(kind, pvalues):
    #Evalúa el estadístico kind sobre los P-values (despacho).
    return kind.compute(pvalues)


def reference_threshold(kind, n, alpha):
    #Umbral nulo en forma cerrada en la escala orientada, o None.
    return kind.reference_threshold(n, alpha)
