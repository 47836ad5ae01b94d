"""
Módulo que contiene la clase OrientedStatistic
"""


class OrientedStatistic:
    """
    Valor de un estadístico sobre una muestra, orientado de modo que un valor
    mayor sea más evidencia contra la nula.

    Attributes:
        kind: Estadístico que produjo el valor (instancia de BaseStatistic)
        raw (float): Valor en la escala original del estadístico
        oriented (float): Valor orientado (rechazar por arriba del umbral)
        details (dict): Información adicional del cálculo
    """

    def __init__(self, kind, raw, oriented, details=None):
        self.kind = kind
        self.raw = float(raw)
        self.oriented = float(oriented)
        self.details = details or {}

    def to_dict(self):
        return {
            "stat": self.kind.to_dict(),
            "raw": self.raw,
            "oriented": self.oriented,
            "details": dict(self.details),
        }

    def __str__(self):
        return f"{self.kind.name}: raw={self.raw:.6g}, oriented={self.oriented:.6g}"

    def __repr__(self):
        return self.__str__()
