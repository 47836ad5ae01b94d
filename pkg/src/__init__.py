"""
Laboratorio RareWeak: pruebas globales bajo desviaciones raras y débiles
"""

__version__ = "0.1.0"
