#Módulo que contiene el modelo de Poisson de dos muestras

import numpy as np

from src.models.model_spec import perturbed_means
from src.samplers.base_sampler import BaseSampler
from src.samplers.transforms import pvalue_two_sample_poisson


class TwoSamplePoissonSampler(BaseSampler):
    """
    Modelo de Poisson de dos muestras con medias comunes desconocidas.

    X_i, Y_i ~ Pois(lambda_i) bajo la nula; al desviarse Y_i usa la media
    perturbada. El P-value es el de estabilización de varianza o el binomial
    exacto según spec.method; ambos son solo aproximadamente uniformes.
    """

    def __init__(self, spec):
        super().__init__("two-sample-poisson", spec)

    def draw(self, cal, departing, rng):
        x = rng.poisson(self.lam)
        y = rng.poisson(np.where(departing, perturbed_means(self.lam, cal.mu_n), self.lam))
        return np.asarray(pvalue_two_sample_poisson(x, y, self.spec.method), dtype=float)
