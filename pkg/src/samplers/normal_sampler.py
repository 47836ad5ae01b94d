#Módulo que contiene el modelo normal de una muestra

import numpy as np

from src.samplers.base_sampler import BaseSampler
from src.samplers.transforms import pvalue_one_sample_normal


class NormalSampler(BaseSampler):
    #X_i ~ N(0, 1) bajo la nula, N(mu_n, sigma^2) al desviarse; prueba z de una cola.

    def __init__(self, spec):
        super().__init__("normal", spec)

    def draw(self, cal, departing, rng):
        latent = rng.standard_normal(cal.n)
        x = np.where(departing, cal.mu_n + cal.sigma * latent, latent)
        return pvalue_one_sample_normal(x)
