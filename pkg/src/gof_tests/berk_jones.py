#Módulo que contiene la implementación del estadístico de Berk-Jones (BJ)

import math

import numpy as np
from scipy import special

from src.gof_tests.base_statistic import BaseStatistic
from src.models.statistic_result import OrientedStatistic


class BerkJones(BaseStatistic):
    """
    Estadístico BJ: mínimo sobre i de pi_i = Pr(Beta(i, n-i+1) < p_(i)) y de su
    complemento 1 - pi_i.

    Un valor crudo pequeño es evidencia contra la nula; el valor orientado es
    -log(crudo).
    """

    def __init__(self):
        super().__init__("bj")

    def order_pvalues(self, sorted_pvalues):
        """
        Calcula pi_i y 1 - pi_i para cada estadístico de orden.

        El complemento se evalúa como I_{1-p}(n-i+1, i) para no perder precisión
        cuando pi_i es cercano a 1.

        Args:
            sorted_pvalues (np.ndarray): P-values ordenados

        Returns:
            tuple: (pi, 1 - pi) como arreglos
        """
        n = sorted_pvalues.size
        idx = np.arange(1, n + 1, dtype=float)
        lower = special.betainc(idx, n - idx + 1, sorted_pvalues)
        upper = special.betainc(n - idx + 1, idx, 1 - sorted_pvalues)
        return lower, upper

    def _evaluate(self, sorted_pvalues):
        lower, upper = self.order_pvalues(sorted_pvalues)
        valid = (sorted_pvalues > 0) & (sorted_pvalues < 1)
        skipped = int(sorted_pvalues.size - np.count_nonzero(valid))
        if not np.any(valid):
            return OrientedStatistic(self, 1.0, 0.0, {"side": None, "index": None, "skipped": skipped})

        lower = np.where(valid, lower, np.inf)
        upper = np.where(valid, upper, np.inf)
        i_low = int(np.argmin(lower))
        i_up = int(np.argmin(upper))
        if lower[i_low] <= upper[i_up]:
            raw, side, index = float(lower[i_low]), "lower", i_low + 1
        else:
            raw, side, index = float(upper[i_up]), "upper", i_up + 1

        oriented = -math.log(raw) if raw > 0 else math.inf
        return OrientedStatistic(self, raw, oriented, {"side": side, "index": index, "skipped": skipped})
