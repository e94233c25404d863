"""
Solver lineal de mínimos cuadrados con equilibrado de columnas.

Las columnas (números de features, accesos, tiempos) tienen escalas muy
distintas; se dividen por su norma antes de la factorización QR con
pivoteo (gelsy) y la solución se desescala después. Con rango deficiente
se elimina la componente del espacio nulo, de modo que el resultado es la
solución de norma mínima en las unidades originales.
"""

from dataclasses import dataclass

import numpy as np
from scipy import linalg

# Valores singulares relativos por debajo de este umbral cuentan como rango perdido
RANK_TOLERANCE = 1e-12


@dataclass(frozen=True)
class LstsqSolution:
    coefficients: np.ndarray
    rss: float
    rank: int


def solve_equilibrated(A: np.ndarray, b: np.ndarray) -> LstsqSolution:
    A = np.asarray(A, dtype=float)
    b = np.asarray(b, dtype=float)
    norms = np.linalg.norm(A, axis=0)
    norms[norms == 0] = 1.0
    scaled_A = A / norms
    scaled, _residues, rank, _sv = linalg.lstsq(scaled_A, b, cond=RANK_TOLERANCE, lapack_driver="gelsy")
    coefficients = scaled / norms
    if rank < A.shape[1]:
        # null(A) = D⁻¹·null(A·D⁻¹); se proyecta fuera en la base original
        null_scaled = linalg.null_space(scaled_A, rcond=RANK_TOLERANCE)
        if null_scaled.shape[1]:
            kernel = linalg.orth(null_scaled / norms[:, None])
            coefficients = coefficients - kernel @ (kernel.T @ coefficients)
    residual = A @ coefficients - b
    return LstsqSolution(coefficients=coefficients, rss=float(residual @ residual), rank=int(rank))
