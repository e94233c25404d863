"""
Domain Layer - Simlab

Trazas de potencia, series de medición, configuración y verdad oculta.
"""
