"""
Domain Layer - Energy models

Variables de alto nivel, catálogo de modelos y modelos entrenados.
"""
