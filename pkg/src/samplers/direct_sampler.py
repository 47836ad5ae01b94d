#Módulo que contiene el modelo directo de P-values (log-chi-cuadrado)

import numpy as np

from src.samplers.base_sampler import BaseSampler


class DirectSampler(BaseSampler):
    #Genera P-values directamente: uniformes bajo la nula y -2 log p ~ (mu_n + sigma Z)^2 al desviarse.

    def __init__(self, spec):
        super().__init__("direct", spec)

    def draw(self, cal, departing, rng):
        # 1 - U cae en (0, 1]
        pvalues = 1.0 - rng.random(cal.n)
        latent = rng.standard_normal(cal.n)
        if departing.any():
            half_chisq = 0.5 * (cal.mu_n + cal.sigma * latent[departing]) ** 2
            pvalues[departing] = np.exp(-half_chisq)
        return pvalues
