"""
Application Layer - Simlab

Servicios de integración, intervalos de confianza y generación.
"""
