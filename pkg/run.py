"""
Archivo principal para ejecutar relcat desde la consola.

Uso:
    python run.py validate ejemplos/zmod2.relcat
    python run.py verify ejemplos/cofibra.diagram --json
"""

import sys

if __name__ == "__main__":
    from ui.interfaz import main
    sys.exit(main())
