#Módulo que contiene el modelo de Poisson de una muestra

import numpy as np

from src.models.model_spec import perturbed_means
from src.samplers.base_sampler import BaseSampler
from src.samplers.transforms import pvalue_poisson_randomized


class PoissonSampler(BaseSampler):
    """
    Modelo de Poisson de una muestra con medias conocidas.

    X_i ~ Pois(lambda_i) bajo la nula y Pois(lambda_i + mu_n sqrt(lambda_i)) al
    desviarse. El P-value de cola superior se aleatoriza con U_i ~ Unif[0, 1)
    tomado del mismo flujo, justo después del conteo.
    """

    def __init__(self, spec):
        super().__init__("poisson", spec)

    def draw(self, cal, departing, rng):
        means = np.where(departing, perturbed_means(self.lam, cal.mu_n), self.lam)
        counts = rng.poisson(means)
        u = rng.random(cal.n)
        return pvalue_poisson_randomized(counts, self.lam, u)
