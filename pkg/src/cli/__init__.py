"""
Módulo de la interfaz de línea de comandos
"""
