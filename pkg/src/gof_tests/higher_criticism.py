#Módulo que contiene la implementación del estadístico Higher Criticism (HC)

import logging
import math

import numpy as np

from src.gof_tests.base_statistic import BaseStatistic
from src.models.statistic_result import OrientedStatistic
from src.utils.errors import DomainError

logger = logging.getLogger(__name__)

DEFAULT_GAMMA0 = 0.2


class HigherCriticism(BaseStatistic):
    """
    Estadístico HC*: máximo de las desviaciones estandarizadas de la CDF empírica
    de los P-values respecto de la uniforme, sobre los primeros ceil(n * gamma0)
    estadísticos de orden.
    """

    def __init__(self, gamma0=DEFAULT_GAMMA0):
        super().__init__("hc")
        gamma0 = float(gamma0)
        if not 0 < gamma0 <= 1:
            raise DomainError(f"gamma0 debe estar en (0, 1], se recibió {gamma0}")
        self.gamma0 = gamma0

    def parameters(self):
        return {"gamma0": self.gamma0}

    def index_cap(self, n):
        #Número de términos evaluados: ceil(n * gamma0), al menos uno.
        return max(1, min(n, math.ceil(round(n * self.gamma0, 9))))

    def _evaluate(self, sorted_pvalues):
        n = sorted_pvalues.size
        cap = self.index_cap(n)
        prefix = sorted_pvalues[:cap]
        idx = np.arange(1, cap + 1, dtype=float)

        # Los términos con p en {0, 1} no tienen denominador definido
        valid = (prefix > 0) & (prefix < 1)
        skipped = int(cap - np.count_nonzero(valid))
        if skipped:
            logger.debug("HC: %d términos degenerados omitidos", skipped)
        if not np.any(valid):
            return OrientedStatistic(self, -math.inf, -math.inf,
                                     {"index": None, "threshold": None, "skipped": skipped})

        p = prefix[valid]
        terms = np.sqrt(n) * (idx[valid] / n - p) / np.sqrt(p * (1 - p))
        best = int(np.argmax(terms))
        value = float(terms[best])
        details = {
            "index": int(idx[valid][best]),
            "threshold": float(p[best]),
            "skipped": skipped,
        }
        return OrientedStatistic(self, value, value, details)
