"""
Módulo con la interfaz de línea de comandos del laboratorio raro/débil.

Subcomandos: curve, simulate, scan, calibrate y diagnose. Las tablas se
escriben en --out o en la salida estándar; los diagnósticos van a la salida de
error por medio de logging.
"""

import argparse
import logging
import os
import sys

from src import __version__
from src.cli.emit import CSV, FORMATS, JSON, emit_table
from src.engine.monte_carlo import calibrate_threshold, estimate_power
from src.engine.phase_scan import run_scan
from src.gof_tests import STAT_NAMES, create_statistic
from src.models.experiment import (
    DEFAULT_ALPHA,
    DEFAULT_REPS,
    ExperimentConfig,
    check_alpha,
    check_reps,
    check_seed,
    config_digest,
    make_calibration,
)
from src.models.model_spec import ModelSpec
from src.models.results import CurveTable, ThresholdReport
from src.theory import curves
from src.theory.hellinger import indistinguishability_bound
from src.utils.errors import RareWeakError
from src.utils.file_loader import load_experiment_file, load_scan_file, parse_grid

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CONFIG = 2
EXIT_NUMERICAL = 3

LOG_LEVEL_ENV = "RAREWEAK_LOG_LEVEL"
LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"

CURVE_CHOICES = (curves.ONE_SAMPLE, curves.BONFERRONI, curves.TWO_SAMPLE, curves.BONFERRONI_TWO_SAMPLE)


def configure_logging(verbose=False, quiet=False):
    """
    Configura el logging hacia la salida de error.

    INFO por defecto, DEBUG con -v y WARNING con -q. La variable
    RAREWEAK_LOG_LEVEL tiene prioridad sobre los flags.
    """
    level = logging.INFO
    if verbose:
        level = logging.DEBUG
    elif quiet:
        level = logging.WARNING
    env_level = os.environ.get(LOG_LEVEL_ENV)
    if env_level:
        resolved = logging.getLevelName(env_level.strip().upper())
        if isinstance(resolved, int):
            level = resolved
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr)
    logging.getLogger().setLevel(level)


def build_parser():
    #Construye el parser de argparse con sus subcomandos.
    parser = argparse.ArgumentParser(
        prog="rareweak",
        description="Laboratorio de pruebas globales bajo alternativas raras y débiles",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="Mensajes de depuración")
    parser.add_argument("-q", "--quiet", action="store_true", help="Solo advertencias y errores")
    parser.add_argument("--workers", type=int, dest="workers", metavar="INT", default=None,
                        help="Procesos a usar (acotado por RAREWEAK_THREADS)")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")

    output = argparse.ArgumentParser(add_help=False)
    output.add_argument("--out", type=str, dest="out", metavar="PATH", default=None)
    output.add_argument("--format", type=str, dest="format", choices=FORMATS, default=None)

    subparsers = parser.add_subparsers(dest="command", metavar="COMANDO")
    subparsers.required = True

    curve = subparsers.add_parser("curve", parents=[output], help="Curvas teóricas rho(beta)")
    curve.add_argument("--kind", type=str, dest="kind", choices=CURVE_CHOICES, default=curves.ONE_SAMPLE)
    curve.add_argument("--sigma", type=float, dest="sigma", metavar="FLOAT", default=1.0)
    curve.add_argument("--beta-grid", type=str, dest="beta_grid", metavar="A:B:S", default="0.5:1.0:0.01")
    curve.set_defaults(handler=cmd_curve, default_format=CSV)

    simulate = subparsers.add_parser("simulate", parents=[output], help="Potencia de un experimento")
    simulate.add_argument("--config", type=str, dest="config", metavar="PATH", required=True)
    simulate.add_argument("--seed", type=int, dest="seed", metavar="INT", default=None)
    simulate.set_defaults(handler=cmd_simulate, default_format=JSON)

    scan = subparsers.add_parser("scan", parents=[output], help="Diagrama de fase sobre una grilla")
    scan.add_argument("--config", type=str, dest="config", metavar="PATH", required=True)
    scan.add_argument("--seed", type=int, dest="seed", metavar="INT", default=None)
    scan.set_defaults(handler=cmd_scan, default_format=CSV)

    calibrate = subparsers.add_parser("calibrate", parents=[output], help="Umbral nulo de un estadístico")
    calibrate.add_argument("--stat", type=str, dest="stat", choices=STAT_NAMES, required=True)
    calibrate.add_argument("--gamma0", type=float, dest="gamma0", metavar="FLOAT", default=None)
    calibrate.add_argument("--n", type=int, dest="n", metavar="INT", required=True)
    calibrate.add_argument("--alpha", type=float, dest="alpha", metavar="FLOAT", default=DEFAULT_ALPHA)
    calibrate.add_argument("--reps", type=int, dest="reps", metavar="INT", default=DEFAULT_REPS)
    calibrate.add_argument("--seed", type=int, dest="seed", metavar="INT", default=0)
    calibrate.add_argument("--model", type=str, dest="model", choices=ModelSpec.KINDS, default=ModelSpec.DIRECT)
    calibrate.set_defaults(handler=cmd_calibrate, default_format=CSV)

    diagnose = subparsers.add_parser("diagnose", parents=[output], help="Cota de indistinguibilidad de Hellinger")
    diagnose.add_argument("--n", type=int, dest="n", metavar="INT", required=True)
    diagnose.add_argument("--beta", type=float, dest="beta", metavar="FLOAT", required=True)
    diagnose.add_argument("--r", type=float, dest="r", metavar="FLOAT", required=True)
    diagnose.add_argument("--sigma", type=float, dest="sigma", metavar="FLOAT", default=1.0)
    diagnose.add_argument("--model", type=str, dest="model", choices=ModelSpec.KINDS, default=ModelSpec.DIRECT)
    diagnose.set_defaults(handler=cmd_diagnose, default_format=JSON)

    return parser


def _metadata(command, seed, settings, notes=None):
    metadata = {
        "tool": "rareweak",
        "version": __version__,
        "command": command,
        "seed": seed,
        "digest": config_digest(settings),
        "config": settings,
    }
    metadata.update(notes or {})
    return metadata


def _hc_notes(stat, n):
    #Nivel asintótico de HC bajo la nula, junto al umbral empírico.
    if stat.name != "hc" or n < 3:
        return {}
    return {"hc_null_level": curves.hc_null_level(n)}


def _curve_notes(kind, sigma):
    #Para las curvas de Bonferroni, el beta desde el cual coinciden con la óptima.
    if kind == curves.BONFERRONI:
        return {"bonferroni_optimal_from": curves.bonferroni_optimal_from(sigma)}
    if kind == curves.BONFERRONI_TWO_SAMPLE:
        return {"bonferroni_optimal_from": curves.bonferroni_optimal_from(sigma, two_sample=True)}
    return {}


def cmd_curve(args):
    #Evalúa una curva teórica sobre la grilla de beta.
    betas = parse_grid(args.beta_grid, field="beta-grid")
    rows = [(beta, curves.curve_value(args.kind, beta, args.sigma)) for beta in betas]
    settings = {"kind": args.kind, "sigma": args.sigma, "beta_grid": args.beta_grid}
    return CurveTable(args.kind, args.sigma, rows), _metadata("curve", None, settings,
                                                         _curve_notes(args.kind, args.sigma))


def cmd_simulate(args):
    #Estima la potencia del experimento del archivo de configuración.
    cfg = load_experiment_file(args.config)
    if args.seed is not None:
        cfg = ExperimentConfig(cfg.model, cfg.cal, cfg.stat, cfg.alpha, cfg.reps_null, cfg.reps_alt, args.seed)
    estimate = estimate_power(cfg, workers=args.workers)
    return estimate, _metadata("simulate", cfg.seed, cfg.to_dict(), _hc_notes(cfg.stat, cfg.cal.n))


def cmd_scan(args):
    #Recorre la grilla del archivo de barrido.
    scan = load_scan_file(args.config)
    if args.seed is not None:
        scan.seed = check_seed(args.seed)
    table = run_scan(scan, workers=args.workers)
    return table, _metadata("scan", scan.seed, scan.to_dict())


def cmd_calibrate(args):
    #Calibra el umbral nulo y lo compara con la forma cerrada.
    stat = create_statistic(args.stat, args.gamma0)
    model = ModelSpec(args.model)
    cal = make_calibration(args.n, 0.5, 0.0, 1.0)
    alpha = check_alpha(args.alpha)
    reps = check_reps(args.reps, "reps")
    seed = check_seed(args.seed)
    threshold = calibrate_threshold(stat, model, cal, alpha, reps, seed, workers=args.workers)
    report = ThresholdReport(stat, model, cal.n, alpha, reps, threshold, stat.reference_threshold(cal.n, alpha))
    settings = {"stat": stat.to_dict(), "model": model.to_dict(), "n": cal.n, "alpha": alpha, "reps": reps,
                "seed": seed}
    return report, _metadata("calibrate", seed, settings, _hc_notes(stat, cal.n))


def cmd_diagnose(args):
    #Cota de Hellinger; para modelos distintos del directo se marca como heurística.
    cal = make_calibration(args.n, args.beta, args.r, args.sigma)
    heuristic = args.model != ModelSpec.DIRECT
    report = indistinguishability_bound(cal, heuristic=heuristic)
    settings = {"model": args.model}
    settings.update(cal.to_dict())
    return report, _metadata("diagnose", None, settings)


def write_output(data, out_path=None):
    #Escribe el documento en out_path o en la salida estándar.
    if out_path is None:
        sys.stdout.write(data.decode("utf-8"))
        sys.stdout.flush()
        return
    with open(out_path, "wb") as file:
        file.write(data)
    logger.info("Resultados escritos en %s", out_path)


def run_cli(argv):
    """
    Ejecuta la línea de comandos.

    Args:
        argv (list): Argumentos sin el nombre del programa

    Returns:
        int: 0 éxito, 1 uso incorrecto, 2 configuración, 3 fallo numérico o de E/S
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE
    configure_logging(args.verbose, args.quiet)

    try:
        table, metadata = args.handler(args)
        data = emit_table(table, args.format or args.default_format, metadata)
        write_output(data, args.out)
    except RareWeakError as e:
        logger.error("%s", e)
        return e.exit_code
    except OSError as e:
        logger.error("Error de E/S: %s", e)
        return EXIT_NUMERICAL
    return EXIT_OK
