"""
Módulo del motor de Monte Carlo y de los barridos del diagrama de fase
"""
