"""
Fitting - Ajuste de parámetros por error relativo (lineal, trust-region, MARS).
"""
