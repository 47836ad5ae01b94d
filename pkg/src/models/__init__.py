"""
Módulo de modelos de datos para el laboratorio raro/débil
"""
