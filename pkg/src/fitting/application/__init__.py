"""
Application Layer - Fitting

Solvers de ajuste y caso de uso de entrenamiento.
"""
