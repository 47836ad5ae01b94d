"""
Módulo que recorre una grilla (beta, r) y estima la potencia de cada
estadístico en cada celda, junto con la curva teórica correspondiente.
"""

import logging
import math

from src.engine.monte_carlo import estimate_power
from src.models.calibration import Calibration, PhasePoint
from src.models.experiment import ExperimentConfig
from src.models.results import PhaseRow, PhaseTable
from src.theory import curves
from src.utils.errors import ConfigError, RareWeakError
from src.utils.random_streams import derive_seed

logger = logging.getLogger(__name__)

# Estadísticos cuya frontera es la de Bonferroni
BONFERRONI_STATS = ("minp", "fdr")

NOT_APPLICABLE = "n/a"


def theory_curves(model):
    """
    Curvas (óptima, Bonferroni) que corresponden al modelo.

    Returns:
        tuple: (tipo de curva óptima, tipo de curva de Bonferroni)
    """
    if model.is_two_sample:
        return curves.TWO_SAMPLE, curves.BONFERRONI_TWO_SAMPLE
    return curves.ONE_SAMPLE, curves.BONFERRONI


def curve_sigma(model, sigma):
    #Los modelos de Poisson tienen escala unitaria bajo la alternativa.
    return 1.0 if model.is_poisson else sigma


def _theory_for_cell(model, beta, r, sigma):
    #Devuelve (rho_theory, rho_bonf, región); fuera de (1/2, 1) no hay curva.
    if not 0.5 < beta < 1:
        return math.nan, math.nan, NOT_APPLICABLE
    optimal, bonferroni = theory_curves(model)
    sigma = curve_sigma(model, sigma)
    rho_theory = curves.curve_value(optimal, beta, sigma)
    rho_bonf = curves.curve_value(bonferroni, beta, sigma)
    region = curves.classify(PhasePoint(beta, r, sigma), optimal)
    return rho_theory, rho_bonf, region


def phase_scan(model, n, sigma, beta_grid, r_grid, stats, alpha, reps_null, reps_alt, seed, workers=None):
    """
    Estima potencia y riesgo para cada celda (beta, r) y cada estadístico.

    Las filas salen en orden de grilla: beta, luego r, luego estadístico. La
    celda número k usa la sub-semilla derive_seed(seed, k). Si una celda falla
    se registra el error en su fila y el barrido continúa.

    Args:
        model (ModelSpec): Modelo generador
        n (int): Número de características
        sigma (float): Escala
        beta_grid (list): Valores de beta
        r_grid (list): Valores de r
        stats (list): Estadísticos (BaseStatistic)
        alpha (float): Nivel
        reps_null (int): Réplicas nulas por celda
        reps_alt (int): Réplicas alternativas por celda
        seed (int): Semilla del barrido
        workers (int, optional): Procesos

    Returns:
        PhaseTable: Tabla con len(beta_grid) * len(r_grid) * len(stats) filas
    """
    if not beta_grid or not r_grid or not stats:
        raise ConfigError("las grillas y la lista de estadísticos no pueden estar vacías")
    base = ExperimentConfig(model, Calibration(n, 0.5, 0.0, sigma), stats[0], alpha,
                            reps_null, reps_alt, seed)
    with_bonferroni = any(stat.name in BONFERRONI_STATS for stat in stats)
    table = PhaseTable(with_bonferroni=with_bonferroni)

    cell_index = 0
    for beta in beta_grid:
        for r in r_grid:
            rho_theory, rho_bonf, region = _theory_for_cell(model, beta, r, sigma)
            for stat in stats:
                sub_seed = derive_seed(seed, cell_index)
                cell_index += 1
                power = risk = math.nan
                error = None
                try:
                    estimate = estimate_power(base.with_cell(beta, r, stat, sub_seed), workers=workers)
                    power, risk = estimate.power_hat, estimate.risk_hat
                except RareWeakError as e:
                    error = str(e)
                    logger.warning("Celda beta=%g, r=%g, %s falló: %s", beta, r, stat, e)
                table.append(PhaseRow(beta, r, sigma, stat.name, power, risk, rho_theory, region,
                                      error=error, rho_bonf=rho_bonf))
            logger.info("Celda beta=%g, r=%g lista (%s)", beta, r, region)
    return table


def run_scan(scan, workers=None):
    #Ejecuta un barrido descrito por un ScanConfig.
    return phase_scan(scan.model, scan.n, scan.sigma, scan.beta_grid, scan.r_grid, scan.stats,
                      scan.alpha, scan.reps_null, scan.reps_alt, scan.seed, workers=workers)
