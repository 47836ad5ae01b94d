#Módulo que contiene el estadístico de la prueba global basada en FDR

import math

import numpy as np

from src.gof_tests.base_statistic import BaseStatistic
from src.models.statistic_result import OrientedStatistic


class FdrMin(BaseStatistic):
    """
    Estadístico min_i p_(i) / (i / n).

    La prueba rechaza cuando el mínimo cae por debajo del valor crítico
    h(alpha, n); orientado como -log(mínimo).
    """

    def __init__(self):
        super().__init__("fdr")

    def _evaluate(self, sorted_pvalues):
        n = sorted_pvalues.size
        idx = np.arange(1, n + 1, dtype=float)
        ratios = sorted_pvalues / (idx / n)
        best = int(np.argmin(ratios))
        raw = float(ratios[best])
        oriented = -math.log(raw) + 0.0 if raw > 0 else math.inf
        return OrientedStatistic(self, raw, oriented, {"index": best + 1})
