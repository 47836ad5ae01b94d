"""
Módulo con la jerarquía de excepciones del laboratorio.

Cada excepción lleva el código de salida que usa la línea de comandos.
"""


class RareWeakError(Exception):
    """
    Clase base de todos los errores del laboratorio.

    Attributes:
        exit_code (int): Código de salida asociado en la CLI
    """

    exit_code = 3


class DomainError(RareWeakError, ValueError):
    #Argumento fuera del dominio de una operación (beta, sigma, probabilidades...).
    exit_code = 2

    def __init__(self, message, field=None):
        super().__init__(message)
        self.field = field


class ConfigError(RareWeakError):
    """
    Error en un documento de configuración o en los parámetros de un experimento.

    Attributes:
        field (str): Campo del documento que causó el error (si se conoce)
        line (int): Línea del error de sintaxis JSON (si aplica)
        column (int): Columna del error de sintaxis JSON (si aplica)
    """

    exit_code = 2

    def __init__(self, message, field=None, line=None, column=None):
        self.field = field
        self.line = line
        self.column = column
        if field is not None:
            message = f"{field}: {message}"
        if line is not None:
            message = f"{message} (línea {line}, columna {column})"
        super().__init__(message)


class NumericalError(RareWeakError, ArithmeticError):
    """
    Fallo numérico: desbordamiento, P-value nulo, cuadratura que no converge.

    Attributes:
        partial: Resultado parcial disponible al momento del fallo (o None)
    """

    exit_code = 3

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial
