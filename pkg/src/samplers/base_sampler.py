"""
Módulo que contiene la clase base para los modelos generadores de P-values
"""

import logging

import numpy as np

from src.models.model_spec import Hypothesis
from src.utils.errors import NumericalError

logger = logging.getLogger(__name__)


class BaseSampler:
    #Clase base que define la interfaz común para todos los modelos generadores.

    def __init__(self, name, spec):
        """
        Inicializa un nuevo generador.

        Args:
            name (str): Nombre del modelo
            spec (ModelSpec): Especificación con los parámetros nuisance
        """
        self.name = name
        self.spec = spec
        self.nu = None
        self.lam = None
        self._prepared_for = None

    def prepare(self, cal, nuisance_seed=0):
        """
        Resuelve los vectores nuisance para la calibración dada. Se llama una vez
        por lote de réplicas; las réplicas de un mismo experimento comparten los
        mismos nu y lambda.
        """
        key = (cal.n, nuisance_seed)
        if self._prepared_for != key:
            self.nu, self.lam = self.spec.resolve_nuisance(cal.n, nuisance_seed)
            self._prepared_for = key

    def departure_mask(self, cal, hyp, rng):
        """
        Sortea qué características se desvían, cada una independiente con
        probabilidad eps_n. Bajo la nula se consumen los mismos números del flujo
        y no se desvía ninguna.
        """
        draws = rng.random(cal.n)
        if hyp == Hypothesis.NULL:
            return np.zeros(cal.n, dtype=bool)
        if cal.n == 1:
            logger.warning("Alternativa con n = 1: eps_n = 1 y mu_n = 0")
        return draws < cal.eps_n

    def draw(self, cal, departing, rng):
        #Genera los datos crudos y devuelve sus P-values.
        raise NotImplementedError("Las clases hijas deben implementar este método")

    def sample(self, cal, hyp, rng, nuisance_seed=0):
        """
        Genera un vector de P-values para una réplica.

        Args:
            cal (Calibration): Calibración
            hyp (str): Hypothesis.NULL o Hypothesis.ALTERNATIVE
            rng (np.random.Generator): Flujo de la réplica
            nuisance_seed (int, optional): Semilla para los parámetros nuisance

        Returns:
            np.ndarray: P-values en (0, 1]
        """
        Hypothesis.check(hyp)
        self.prepare(cal, nuisance_seed)
        departing = self.departure_mask(cal, hyp, rng)
        with np.errstate(under="ignore"):
            pvalues = self.draw(cal, departing, rng)
        if not np.all(np.isfinite(pvalues)) or np.any(pvalues <= 0):
            raise NumericalError(
                f"{self.name}: P-value no representable (0 o no finito); "
                f"reduzca r o n (mu_n = {cal.mu_n:.3g})"
            )
        return pvalues

    def __str__(self):
        return f"{self.__class__.__name__}({self.name})"

    def __repr__(self):
        return self.__str__()
