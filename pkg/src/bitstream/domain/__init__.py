"""
Domain Layer - Bitstream

Eventos de instrumentación, trazas y vectores de features.
"""
