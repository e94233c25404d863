"""
Energy models - Los nueve estimadores de energía de decodificación.
"""
