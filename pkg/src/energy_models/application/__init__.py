"""
Application Layer - Energy models

Estimadores de energía y caso de uso de estimación.
"""
