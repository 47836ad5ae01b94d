"""
Módulo de resultados teóricos: curvas de transición de fase y cotas de Hellinger
"""
