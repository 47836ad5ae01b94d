#Módulo que contiene el estadístico de combinación de Fisher

import numpy as np
from scipy import stats

from src.gof_tests.base_statistic import BaseStatistic
from src.models.statistic_result import OrientedStatistic
from src.utils.errors import NumericalError


class Fisher(BaseStatistic):
    #Estadístico F_n = sum(-2 log p_i), chi-cuadrado con 2n grados de libertad bajo la nula.

    def __init__(self):
        super().__init__("fisher")

    def _evaluate(self, sorted_pvalues):
        if np.any(sorted_pvalues <= 0):
            raise NumericalError("Fisher: un P-value igual a 0 produce un estadístico infinito")
        value = float(np.sum(-2.0 * np.log(sorted_pvalues))) + 0.0
        return OrientedStatistic(self, value, value)

    def reference_threshold(self, n, alpha):
        return float(stats.chi2.isf(alpha, 2 * n))
