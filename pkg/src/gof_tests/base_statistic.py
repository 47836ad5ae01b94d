"""
Módulo que contiene la clase base para los estadísticos de prueba global
"""

from src.models.pvalue_vector import PValueVector


class BaseStatistic:
    #Clase base que define la interfaz común para todos los estadísticos globales.

    def __init__(self, name):
        """
        Inicializa un nuevo estadístico.

        Args:
            name (str): Nombre del estadístico en los documentos de configuración
        """
        self.name = name

    def compute(self, pvalues):
        """
        Evalúa el estadístico sobre un vector de P-values.

        Trabaja sobre una copia ordenada interna; nunca modifica los datos
        recibidos.

        Args:
            pvalues (PValueVector | array-like): P-values en [0, 1]

        Returns:
            OrientedStatistic: Valor crudo y orientado
        """
        vector = PValueVector.wrap(pvalues, allow_zero=True)
        return self._evaluate(vector.sorted())

    def _evaluate(self, sorted_pvalues):
        #Calcula el estadístico a partir de los P-values ya ordenados.
        raise NotImplementedError("Las clases hijas deben implementar este método")

    def reference_threshold(self, n, alpha):
        #Umbral nulo en forma cerrada (escala orientada), si existe.
        return None

    def parameters(self):
        return {}

    def to_dict(self):
        data = {"kind": self.name}
        data.update(self.parameters())
        return data

    def __eq__(self, other):
        if not isinstance(other, BaseStatistic):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def __hash__(self):
        return hash(tuple(sorted(self.to_dict().items())))

    def __str__(self):
        params = ", ".join(f"{key}={value}" for key, value in self.parameters().items())
        return f"{self.name}({params})" if params else self.name

    def __repr__(self):
        return self.__str__()
