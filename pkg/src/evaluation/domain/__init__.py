"""
Domain Layer - Evaluation

Informes de validación cruzada.
"""
