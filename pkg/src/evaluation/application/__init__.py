"""
Application Layer - Evaluation

Servicios de evaluación y casos de uso `cv` y `report`.
"""
