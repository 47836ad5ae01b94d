"""
Módulo de modelos generadores de P-values para el laboratorio raro/débil
"""

import logging

from src.models.model_spec import ModelSpec
from src.models.pvalue_vector import PValueVector
from src.samplers.direct_sampler import DirectSampler
from src.samplers.normal_sampler import NormalSampler
from src.samplers.poisson_sampler import PoissonSampler
from src.samplers.two_sample_normal_sampler import TwoSampleNormalSampler
from src.samplers.two_sample_poisson_sampler import TwoSamplePoissonSampler
from src.utils.random_streams import make_generator

logger = logging.getLogger(__name__)

SAMPLERS = {
    ModelSpec.DIRECT: DirectSampler,
    ModelSpec.ONE_SAMPLE_NORMAL: NormalSampler,
    ModelSpec.TWO_SAMPLE_NORMAL: TwoSampleNormalSampler,
    ModelSpec.ONE_SAMPLE_POISSON: PoissonSampler,
    ModelSpec.TWO_SAMPLE_POISSON: TwoSamplePoissonSampler,
}


def create_sampler(spec, cal=None):
    """
    Crea el generador correspondiente a la especificación.

    Args:
        spec (ModelSpec): Especificación del modelo
        cal (Calibration, optional): Si se da, se avisa cuando sigma no aplica

    Returns:
        BaseSampler: Generador listo para usar
    """
    if spec.is_poisson and cal is not None and cal.sigma != 1.0:
        logger.warning("El modelo %s ignora sigma = %g (se usa sigma = 1)", spec.kind, cal.sigma)
    return SAMPLERS[spec.kind](spec)


def sample_pvalues(spec, cal, hyp, seed, rep_index):
    """
    Genera el vector de P-values de la réplica rep_index.

    El resultado depende solo de (spec, cal, hyp, seed, rep_index).

    Returns:
        PValueVector: P-values en (0, 1]
    """
    sampler = create_sampler(spec, cal)
    rng = make_generator(seed, rep_index)
    return PValueVector(sampler.sample(cal, hyp, rng, nuisance_seed=seed))
