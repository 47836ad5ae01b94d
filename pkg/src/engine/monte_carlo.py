"""
Módulo del motor de Monte Carlo: simulación de estadísticos, calibración de
umbrales nulos y estimación de potencia.

Las réplicas se reparten en bloques contiguos entre procesos de un
multiprocessing.Pool. Cada réplica usa su propio flujo Philox, así que el
resultado no depende del número de procesos.
"""

import logging
import math
import os

import numpy as np
from multiprocessing import Pool

from src.models.experiment import check_alpha, check_reps
from src.models.model_spec import Hypothesis
from src.models.results import PowerEstimate
from src.samplers import create_sampler
from src.utils.errors import ConfigError
from src.utils.random_streams import (
    STREAM_ALTERNATIVE,
    STREAM_NULL_CALIBRATION,
    STREAM_NULL_CHECK,
    derive_seed,
    make_generator,
)

logger = logging.getLogger(__name__)

THREADS_ENV = "RAREWEAK_THREADS"

# Réplicas mínimas por bloque antes de repartir entre procesos
MIN_CHUNK = 25


def worker_cap():
    """
    Máximo de procesos permitidos: RAREWEAK_THREADS si está definida, si no el
    número de CPUs.
    """
    raw = os.environ.get(THREADS_ENV)
    if raw is None or raw.strip() == "":
        return os.cpu_count() or 1
    try:
        cap = int(raw)
    except ValueError:
        raise ConfigError(f"se esperaba un entero, se recibió {raw!r}", field=THREADS_ENV) from None
    if cap < 1:
        raise ConfigError(f"debe ser >= 1, se recibió {cap}", field=THREADS_ENV)
    return cap


def resolve_workers(requested=None):
    #Número de procesos a usar, acotado por worker_cap().
    cap = worker_cap()
    if requested is None:
        return cap
    if requested < 1:
        raise ConfigError(f"debe ser >= 1, se recibió {requested}", field="workers")
    return min(int(requested), cap)


def _simulate_chunk(task):
    #Simula las réplicas [start, stop) de un lote y devuelve sus estadísticos orientados.
    stat, model, cal, hyp, seed, nuisance_seed, start, stop = task
    sampler = create_sampler(model)
    sampler.prepare(cal, nuisance_seed)
    values = np.empty(stop - start)
    for offset, rep_index in enumerate(range(start, stop)):
        rng = make_generator(seed, rep_index)
        pvalues = sampler.sample(cal, hyp, rng, nuisance_seed)
        values[offset] = stat.compute(pvalues).oriented
    logger.debug("Bloque [%d, %d) de %s listo", start, stop, stat)
    return values


def _chunks(reps, workers):
    n_chunks = max(1, min(workers * 4, reps // MIN_CHUNK))
    bounds = np.linspace(0, reps, n_chunks + 1).astype(int)
    return [(int(bounds[i]), int(bounds[i + 1])) for i in range(n_chunks) if bounds[i + 1] > bounds[i]]


def simulate_statistics(stat, model, cal, hyp, seed, reps, workers=None, nuisance_seed=None):
    """
    Simula reps réplicas y devuelve el estadístico orientado de cada una.

    La réplica k ocupa la posición k y solo depende de (seed, k): pedir más
    réplicas extiende el vector sin cambiar los valores anteriores.

    Args:
        stat (BaseStatistic): Estadístico
        model (ModelSpec): Modelo generador
        cal (Calibration): Calibración
        hyp (str): Hypothesis.NULL o Hypothesis.ALTERNATIVE
        seed (int): Semilla del lote
        reps (int): Número de réplicas
        workers (int, optional): Procesos a usar (acotado por RAREWEAK_THREADS)
        nuisance_seed (int, optional): Semilla de los parámetros nuisance.
            Defaults to seed.

    Returns:
        np.ndarray: Estadísticos orientados, longitud reps
    """
    Hypothesis.check(hyp)
    if nuisance_seed is None:
        nuisance_seed = seed
    # Avisos de configuración una sola vez, en el proceso principal
    create_sampler(model, cal)
    workers = resolve_workers(workers)
    tasks = [(stat, model, cal, hyp, seed, nuisance_seed, start, stop)
             for start, stop in _chunks(reps, workers)]

    if workers <= 1 or len(tasks) <= 1:
        results = [_simulate_chunk(task) for task in tasks]
    else:
        with Pool(processes=min(workers, len(tasks))) as pool:
            results = pool.map(_simulate_chunk, tasks)
    return np.concatenate(results) if results else np.empty(0)


def empirical_quantile(values, prob):
    """
    Cuantil empírico tipo 7 (interpolación lineal).

    Cuando los vecinos incluyen infinitos la interpolación no está definida y se
    devuelve el estadístico de orden inferior.
    """
    values = np.asarray(values, dtype=float)
    with np.errstate(invalid="ignore"):
        value = float(np.quantile(values, prob, method="linear"))
    if math.isnan(value):
        value = float(np.quantile(values, prob, method="lower"))
    return value


def calibrate_threshold(stat, model, cal, alpha, reps, seed, workers=None):
    """
    Calibra el umbral nulo del estadístico: el cuantil (1 - alpha) empírico de
    reps réplicas bajo la nula.

    Args:
        stat (BaseStatistic): Estadístico
        model (ModelSpec): Modelo generador
        cal (Calibration): Calibración (solo n importa bajo la nula)
        alpha (float): Nivel en (0, 1)
        reps (int): Réplicas nulas, >= 100
        seed (int): Semilla del experimento
        workers (int, optional): Procesos

    Returns:
        float: Umbral en la escala orientada
    """
    reps = check_reps(reps, "reps")
    alpha = check_alpha(alpha)
    values = simulate_statistics(stat, model, cal, Hypothesis.NULL,
                                 derive_seed(seed, STREAM_NULL_CALIBRATION), reps,
                                 workers=workers, nuisance_seed=seed)
    threshold = empirical_quantile(values, 1.0 - alpha)
    logger.debug("Umbral de %s con n=%d, alpha=%g: %.6g", stat, cal.n, alpha, threshold)
    return threshold


def estimate_power(cfg, workers=None, alternative=Hypothesis.ALTERNATIVE):
    """
    Estima potencia, error tipo I y riesgo de un experimento.

    Se usan tres lotes independientes derivados de la semilla: calibración del
    umbral (reps_null), control del error tipo I (reps_null) y alternativa
    (reps_alt). Se rechaza cuando el estadístico orientado supera el umbral.

    Args:
        cfg (ExperimentConfig): Experimento
        workers (int, optional): Procesos
        alternative (str, optional): Hipótesis del lote de potencia. Con
            Hypothesis.NULL se obtiene un control nulo contra nulo.

    Returns:
        PowerEstimate: Estimaciones del experimento
    """
    logger.info("Experimento %s (digest %s)", cfg, cfg.digest())
    threshold = calibrate_threshold(cfg.stat, cfg.model, cfg.cal, cfg.alpha, cfg.reps_null,
                                    cfg.seed, workers=workers)

    null_check = simulate_statistics(cfg.stat, cfg.model, cfg.cal, Hypothesis.NULL,
                                     derive_seed(cfg.seed, STREAM_NULL_CHECK), cfg.reps_null,
                                     workers=workers, nuisance_seed=cfg.seed)
    departures = simulate_statistics(cfg.stat, cfg.model, cfg.cal, alternative,
                                     derive_seed(cfg.seed, STREAM_ALTERNATIVE), cfg.reps_alt,
                                     workers=workers, nuisance_seed=cfg.seed)

    estimate = PowerEstimate(
        cfg.stat,
        threshold,
        type1_hat=np.mean(null_check > threshold),
        power_hat=np.mean(departures > threshold),
        reps_null=cfg.reps_null,
        reps_alt=cfg.reps_alt,
        alpha=cfg.alpha,
        reference=cfg.stat.reference_threshold(cfg.cal.n, cfg.alpha),
        seed=cfg.seed,
    )
    logger.info("%s", estimate)
    return estimate
