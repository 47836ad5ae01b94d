"""
Módulo que serializa las tablas de resultados a CSV o JSON.

El CSV lleva los metadatos de la corrida como líneas de comentario "# llave: valor",
usa 12 cifras significativas y fin de línea LF. El JSON conserva el orden de las
llaves tal como lo definen las tablas.
"""

import csv
import io
import json
import math
import numbers

CSV = "csv"
JSON = "json"

FORMATS = (CSV, JSON)


def format_value(value):
    #Convierte un valor de celda a texto CSV.
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, numbers.Integral):
        return str(int(value))
    if isinstance(value, numbers.Real):
        value = float(value)
        if math.isnan(value):
            return "nan"
        return "%.12g" % value
    return str(value)


def _metadata_lines(metadata):
    for key, value in metadata.items():
        if isinstance(value, (dict, list)):
            value = json.dumps(value, sort_keys=True, separators=(",", ":"))
        elif value is None:
            value = "none"
        yield f"# {key}: {value}\n"


def emit_table(table, fmt=CSV, metadata=None):
    """
    Serializa una tabla (PhaseTable, PowerEstimate, HellingerReport, CurveTable
    o ThresholdReport).

    Args:
        table: Tabla con CSV_HEADER, csv_rows() y to_dict()
        fmt (str, optional): "csv" o "json". Defaults to "csv".
        metadata (dict, optional): Metadatos de la corrida (semilla, versión, digest)

    Returns:
        bytes: Documento en UTF-8
    """
    metadata = metadata or {}
    if fmt == JSON:
        document = {"metadata": metadata}
        document.update(table.to_dict())
        return (json.dumps(document, indent=2, allow_nan=False) + "\n").encode("utf-8")
    if fmt != CSV:
        raise ValueError(f"formato desconocido: {fmt!r}")

    buffer = io.StringIO(newline="")
    buffer.writelines(_metadata_lines(metadata))
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(table.CSV_HEADER)
    for row in table.csv_rows():
        writer.writerow([format_value(value) for value in row])
    return buffer.getvalue().encode("utf-8")


def read_csv_table(data):
    """
    Lee un CSV emitido por emit_table.

    Returns:
        tuple: (metadatos como dict de textos, encabezado, filas como listas de textos)
    """
    text = data.decode("utf-8") if isinstance(data, bytes) else data
    metadata = {}
    body = []
    for line in text.splitlines():
        if line.startswith("# "):
            key, _, value = line[2:].partition(": ")
            metadata[key] = value
        else:
            body.append(line)
    rows = list(csv.reader(body))
    header = tuple(rows[0]) if rows else ()
    return metadata, header, rows[1:]
