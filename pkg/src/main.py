#!/usr/bin/env python3
# -*- coding: utf-8 -*-

#Aplicación principal del laboratorio raro/débil

import os
import sys

# Añadir el directorio raíz al path para importaciones relativas
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

# Importaciones locales
from src.cli.commands import run_cli


def main():
    #Función principal que ejecuta la línea de comandos
    return run_cli(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
