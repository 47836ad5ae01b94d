#Módulo que contiene la implementación del estadístico de P-value mínimo (Bonferroni)

import math

from src.gof_tests.base_statistic import BaseStatistic
from src.models.statistic_result import OrientedStatistic


class MinPValue(BaseStatistic):
    #Estadístico -log(p_(1)); rechaza cuando el menor P-value es muy pequeño.

    def __init__(self):
        super().__init__("minp")

    def _evaluate(self, sorted_pvalues):
        smallest = float(sorted_pvalues[0])
        value = -math.log(smallest) + 0.0 if smallest > 0 else math.inf
        return OrientedStatistic(self, value, value, {"min_pvalue": smallest})

    def reference_threshold(self, n, alpha):
        # Pr(p_(1) <= t) = 1 - (1 - t)^n bajo la nula
        return -math.log(-math.expm1(math.log1p(-alpha) / n))
