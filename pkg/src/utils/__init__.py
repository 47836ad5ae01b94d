"""
Módulo de utilidades para el laboratorio raro/débil
"""
