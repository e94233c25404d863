"""
Application Layer - Bitstream

Servicios de conteo y generación de trazas, y casos de uso.
"""
