"""
Bitstream - Trazas de instrumentación del decodificador y conteo de features.
"""
