import os
import sys
from pathlib import Path

import pytest

sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from logica.formatos import leer_categoria_relativa, leer_diagrama  # noqa: E402

EJEMPLOS = Path(__file__).resolve().parent.parent / "ejemplos"

CATEGORIAS_DEL_CORPUS = [
    "terminal",
    "vacia",
    "discreta2",
    "discreta3",
    "flecha_marcada",
    "flecha_no_marcada",
    "zmod2",
    "idempotente",
    "cofibra_fuente",
    "cofibra_destino",
    "orbita",
    "orbita_marcada",
    "pushout_apex",
    "coigualador",
]

DIAGRAMAS_DEL_CORPUS = ["terminal_flecha", "discreto", "pushout_points", "cofibra", "orbita", "vacio"]

# diagramas con automorfismos marcados no triviales; sus niveles crecen rápido y se verifican con cotas chicas
DIAGRAMAS_CON_AUTOMORFISMOS = ["pushout_zmod2", "orbita_marcada"]


@pytest.fixture
def ejemplos():
    return EJEMPLOS


@pytest.fixture
def cargar():
    def _cargar(nombre):
        return leer_categoria_relativa(EJEMPLOS / f"{nombre}.relcat")
    return _cargar


@pytest.fixture
def cargar_diagrama():
    def _cargar(nombre):
        return leer_diagrama(EJEMPLOS / f"{nombre}.diagram")
    return _cargar
