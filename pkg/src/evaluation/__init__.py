"""
Evaluation - Métricas de error, validación cruzada, diferenciación por frame e informes.
"""
