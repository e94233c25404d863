"""
decwatt - Estimación de la energía de decodificación de bit streams HEVC.
"""
