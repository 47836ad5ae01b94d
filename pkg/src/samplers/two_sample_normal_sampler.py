#Módulo que contiene el modelo normal de dos muestras con medias nuisance

import numpy as np

from src.samplers.base_sampler import BaseSampler
from src.samplers.transforms import pvalue_two_sample_normal


class TwoSampleNormalSampler(BaseSampler):
    """
    Modelo normal de dos muestras.

    X_i ~ N(nu_i, 1) e Y_i ~ N(nu_i, 1) bajo la nula; al desviarse
    Y_i ~ N(nu_i + mu_n, sigma^2). El P-value es bilateral sobre Y_i - X_i.
    """

    def __init__(self, spec):
        super().__init__("two-sample-normal", spec)

    def draw(self, cal, departing, rng):
        x = self.nu + rng.standard_normal(cal.n)
        noise = rng.standard_normal(cal.n)
        y = np.where(departing, self.nu + cal.mu_n + cal.sigma * noise, self.nu + noise)
        return pvalue_two_sample_normal(x, y)
