"""
Simlab - Laboratorio de medición simulado: integración, protocolo de repetición y generador de datasets.
"""
