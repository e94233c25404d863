"""
Domain Layer - Fitting

Dataset, filas y resultados de ajuste.
"""
