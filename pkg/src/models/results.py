"""
Módulo con las tablas de resultados que emite el laboratorio.

Cada tabla define su encabezado CSV (CSV_HEADER), sus filas (csv_rows) y su
forma JSON (to_dict) con un orden de llaves estable.
"""

import math


def _json_number(value):
    #JSON no admite NaN ni infinitos.
    if value is None or not math.isfinite(value):
        return None
    return value


class PowerEstimate:
    """
    Resultado de un experimento de potencia.

    Attributes:
        threshold (float): Umbral calibrado en la escala orientada
        type1_hat (float): Tasa de rechazo en el lote nulo independiente
        power_hat (float): Tasa de rechazo bajo la alternativa
        risk_hat (float): type1_hat + (1 - power_hat)
        mc_se (float): Error estándar binomial de power_hat
        type1_se (float): Error estándar binomial de type1_hat
        reps_null (int): Réplicas nulas (calibración y control)
        reps_alt (int): Réplicas bajo la alternativa
        alpha (float): Nivel nominal
        reference (float | None): Umbral en forma cerrada, si existe
        seed (int): Semilla del experimento
    """

    CSV_HEADER = ("stat", "alpha", "threshold", "reference", "type1", "type1_se", "power",
                  "risk", "mc_se", "reps_null", "reps_alt")

    def __init__(self, stat, threshold, type1_hat, power_hat, reps_null, reps_alt, alpha,
                 reference=None, seed=0):
        self.stat = stat
        self.threshold = float(threshold)
        self.type1_hat = float(type1_hat)
        self.power_hat = float(power_hat)
        self.risk_hat = self.type1_hat + (1.0 - self.power_hat)
        self.mc_se = math.sqrt(self.power_hat * (1.0 - self.power_hat) / reps_alt)
        self.reps_null = int(reps_null)
        self.reps_alt = int(reps_alt)
        self.type1_se = math.sqrt(self.type1_hat * (1.0 - self.type1_hat) / self.reps_null)
        self.alpha = float(alpha)
        self.reference = reference
        self.seed = seed

    def csv_rows(self):
        return [(self.stat.name, self.alpha, self.threshold, self.reference, self.type1_hat,
                 self.type1_se, self.power_hat, self.risk_hat, self.mc_se, self.reps_null, self.reps_alt)]

    def to_dict(self):
        return {
            "stat": self.stat.to_dict(),
            "alpha": self.alpha,
            "threshold": _json_number(self.threshold),
            "reference": _json_number(self.reference),
            "type1_hat": self.type1_hat,
            "type1_se": self.type1_se,
            "power_hat": self.power_hat,
            "risk_hat": self.risk_hat,
            "mc_se": self.mc_se,
            "reps": {"null": self.reps_null, "alt": self.reps_alt},
            "seed": self.seed,
        }

    def __str__(self):
        return (f"PowerEstimate({self.stat}: power={self.power_hat:.4f}, "
                f"type1={self.type1_hat:.4f}, risk={self.risk_hat:.4f})")

    def __repr__(self):
        return self.__str__()


class PhaseRow:
    #Fila del diagrama de fase: una celda (beta, r) y un estadístico.

    def __init__(self, beta, r, sigma, stat, power, risk, rho_theory, region, error=None, rho_bonf=None):
        self.beta = beta
        self.r = r
        self.sigma = sigma
        self.stat = stat
        self.power = power
        self.risk = risk
        self.rho_theory = rho_theory
        self.region = region
        self.error = error
        self.rho_bonf = rho_bonf

    def to_dict(self, with_bonferroni=False):
        data = {
            "beta": self.beta,
            "r": self.r,
            "sigma": self.sigma,
            "stat": self.stat,
            "power": _json_number(self.power),
            "risk": _json_number(self.risk),
            "rho_theory": _json_number(self.rho_theory),
        }
        if with_bonferroni:
            data["rho_bonf"] = _json_number(self.rho_bonf)
        data["region"] = self.region
        data["error"] = self.error
        return data


class PhaseTable:
    """
    Tabla del diagrama de fase, con una fila por celda y estadístico en el orden
    de la grilla (beta, luego r, luego estadístico).

    Attributes:
        rows (list): Filas PhaseRow
        with_bonferroni (bool): Si las filas JSON incluyen la curva de Bonferroni
    """

    CSV_HEADER = ("beta", "r", "sigma", "stat", "power", "risk", "rho_theory", "region", "error")

    def __init__(self, rows=None, with_bonferroni=False):
        self.rows = list(rows or [])
        self.with_bonferroni = with_bonferroni

    def append(self, row):
        self.rows.append(row)

    def __len__(self):
        return len(self.rows)

    def csv_rows(self):
        return [(row.beta, row.r, row.sigma, row.stat, row.power, row.risk, row.rho_theory,
                 row.region, row.error or "") for row in self.rows]

    def to_dict(self):
        return {"rows": [row.to_dict(self.with_bonferroni) for row in self.rows]}


class HellingerReport:
    """
    Certificado numérico de indistinguibilidad para el modelo directo.

    Attributes:
        cal (Calibration): Calibración evaluada
        epsilon (float): Fracción de mezcla usada
        mu (float): Parámetro de no centralidad
        h2_coord (float): Hellinger cuadrado (convención 1/2) por coordenada
        h2_total (float): Hellinger cuadrado del producto de n coordenadas
        tv_upper (float): Cota superior de la variación total
        risk_lower (float): Cota inferior del riesgo de cualquier prueba
        quadrature_error (float): Error estimado de la cuadratura
        heuristic (bool): La cota se reporta para un modelo distinto del directo
    """

    CSV_HEADER = ("n", "beta", "r", "sigma", "epsilon", "mu", "h2_coord", "h2_total",
                  "tv_upper", "risk_lower", "quadrature_error", "heuristic")

    def __init__(self, cal, epsilon, h2_coord, quadrature_error, heuristic=False):
        self.cal = cal
        self.epsilon = float(epsilon)
        self.mu = cal.mu_n
        self.h2_coord = min(max(float(h2_coord), 0.0), 1.0)
        # Afinidad del producto: A_n = A^n, con A = 1 - h2
        if self.h2_coord >= 1.0:
            self.h2_total = 1.0
        else:
            self.h2_total = -math.expm1(cal.n * math.log1p(-self.h2_coord))
        self.tv_upper = min(1.0, math.sqrt(2.0) * math.sqrt(self.h2_total))
        self.risk_lower = max(0.0, 1.0 - self.tv_upper)
        self.quadrature_error = float(quadrature_error)
        self.heuristic = bool(heuristic)

    def csv_rows(self):
        return [(self.cal.n, self.cal.beta, self.cal.r, self.cal.sigma, self.epsilon, self.mu,
                 self.h2_coord, self.h2_total, self.tv_upper, self.risk_lower,
                 self.quadrature_error, str(self.heuristic).lower())]

    def to_dict(self):
        return {
            "calibration": self.cal.to_dict(),
            "epsilon": self.epsilon,
            "mu": self.mu,
            "h2_coord": self.h2_coord,
            "h2_total": self.h2_total,
            "tv_upper": self.tv_upper,
            "risk_lower": self.risk_lower,
            "quadrature_error": self.quadrature_error,
            "heuristic": self.heuristic,
        }

    def __str__(self):
        return f"HellingerReport(h2={self.h2_coord:.3g}, risk_lower={self.risk_lower:.4f})"

    def __repr__(self):
        return self.__str__()


class CurveTable:
    #Valores (beta, rho) de una curva teórica.

    CSV_HEADER = ("beta", "rho")

    def __init__(self, kind, sigma, rows=None):
        self.kind = kind
        self.sigma = sigma
        self.rows = list(rows or [])

    def __len__(self):
        return len(self.rows)

    def csv_rows(self):
        return list(self.rows)

    def to_dict(self):
        return {
            "kind": self.kind,
            "sigma": self.sigma,
            "rows": [{"beta": beta, "rho": rho} for beta, rho in self.rows],
        }


class ThresholdReport:
    #Umbral nulo calibrado, con el de forma cerrada cuando existe.

    CSV_HEADER = ("stat", "model", "n", "alpha", "reps", "threshold", "reference")

    def __init__(self, stat, model, n, alpha, reps, threshold, reference=None):
        self.stat = stat
        self.model = model
        self.n = n
        self.alpha = alpha
        self.reps = reps
        self.threshold = threshold
        self.reference = reference

    def csv_rows(self):
        return [(self.stat.name, self.model.kind, self.n, self.alpha, self.reps, self.threshold,
                 self.reference)]

    def to_dict(self):
        return {
            "stat": self.stat.to_dict(),
            "model": self.model.to_dict(),
            "n": self.n,
            "alpha": self.alpha,
            "reps": self.reps,
            "threshold": _json_number(self.threshold),
            "reference": _json_number(self.reference),
        }
