#Módulo con funciones para cargar documentos de experimentos y barridos

import json
import logging
import math

import numpy as np

from src.models.experiment import ExperimentConfig, ScanConfig
from src.utils.errors import ConfigError

logger = logging.getLogger(__name__)

GRID_TOLERANCE = 1e-9


def parse_grid(text, field="grid"):
    """
    Expande una grilla "a:b:s" semiabierta en b: a, a + s, ... < b.

    Args:
        text (str): Grilla con el formato inicio:fin:paso
        field (str, optional): Campo para los mensajes de error

    Returns:
        list: Valores de la grilla
    """
    parts = str(text).split(":")
    if len(parts) != 3:
        raise ConfigError(f"se esperaba inicio:fin:paso, se recibió {text!r}", field=field)
    try:
        start, stop, step = (float(part) for part in parts)
    except ValueError:
        raise ConfigError(f"valores no numéricos en {text!r}", field=field) from None
    if not all(math.isfinite(v) for v in (start, stop, step)) or step <= 0:
        raise ConfigError(f"el paso debe ser positivo y finito en {text!r}", field=field)
    count = max(0, math.ceil((stop - start) / step - GRID_TOLERANCE))
    # start + k * step evita acumular error de redondeo
    return [float(v) for v in np.round(start + step * np.arange(count), 12)]


def _decode(text):
    #Decodifica texto (bytes UTF-8 o str) como JSON con errores de línea y columna.
    if isinstance(text, (bytes, bytearray)):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as e:
            raise ConfigError(f"el documento no es UTF-8 válido: {e}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ConfigError(f"JSON inválido: {e.msg}", line=e.lineno, column=e.colno) from None


def parse_config(text):
    """
    Lee un documento de experimento.

    Args:
        text (bytes | str): Documento JSON

    Returns:
        ExperimentConfig: Experimento validado con los valores por defecto aplicados
    """
    return ExperimentConfig.from_dict(_decode(text))


def parse_scan_config(text):
    """
    Lee un documento de barrido. beta_grid y r_grid aceptan listas o "a:b:s".

    Returns:
        ScanConfig: Barrido validado
    """
    data = _decode(text)
    if isinstance(data, dict):
        for key in ("beta_grid", "r_grid"):
            if isinstance(data.get(key), str):
                data[key] = parse_grid(data[key], field=key)
    return ScanConfig.from_dict(data)


def _read(file_path):
    try:
        with open(file_path, "rb") as file:
            return file.read()
    except FileNotFoundError:
        raise ConfigError(f"No se encontró el archivo: {file_path}") from None


def load_experiment_file(file_path):
    #Carga un experimento desde un archivo JSON.
    config = parse_config(_read(file_path))
    logger.debug("Experimento cargado de %s: %s", file_path, config)
    return config


def load_scan_file(file_path):
    #Carga un barrido desde un archivo JSON.
    scan = parse_scan_config(_read(file_path))
    logger.debug("Barrido cargado de %s: %s", file_path, scan)
    return scan
