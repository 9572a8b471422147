"""
Cotas y parámetros globales de relcat.

Todas las construcciones son finitas: se truncan los conjuntos simpliciales,
se acota la longitud de las palabras y se limita el número total de símplices.
"""

import os
from dataclasses import dataclass, field, replace

from .errores import ErrorDeConfiguracion

PRESUPUESTO_POR_DEFECTO = 500_000
VARIABLE_PRESUPUESTO = "RELCAT_BUDGET"
DIRECCIONES_DE_INSERCION = ("forward", "paper-literal")
VARIANZAS = ("left", "right")


def presupuesto_global():
    """
    Lee el presupuesto de símplices desde el entorno.

    Returns:
        int: Valor de RELCAT_BUDGET, o PRESUPUESTO_POR_DEFECTO si no está definido
    """
    valor = os.environ.get(VARIABLE_PRESUPUESTO)
    if valor is None or valor.strip() == "":
        return PRESUPUESTO_POR_DEFECTO
    try:
        presupuesto = int(valor)
    except ValueError:
        raise ErrorDeConfiguracion(f"{VARIABLE_PRESUPUESTO} debe ser un entero, no {valor!r}") from None
    if presupuesto <= 0:
        raise ErrorDeConfiguracion(f"{VARIABLE_PRESUPUESTO} debe ser positivo")
    return presupuesto


@dataclass(frozen=True)
class Cotas:
    """
    Parámetros de truncamiento de una ejecución.

    n_externa es N_outer (niveles del diagrama de clasificación), n_interna es
    N_inner (grado máximo de cada nervio) y grado_homologia es K, el último grado
    en el que se compara homología. Se necesita K + 1 <= n_interna.
    """

    n_externa: int = 2
    n_interna: int = 4
    grado_homologia: int = 3
    max_longitud_palabra: int = 8
    max_pasadas_completado: int = 20
    presupuesto_simplices: int = field(default_factory=presupuesto_global)
    direccion_insercion: str = "forward"

    def validar(self):
        """Lanza ErrorDeConfiguracion si las cotas son inconsistentes."""
        if self.n_externa < 0 or self.n_interna < 0 or self.grado_homologia < 0:
            raise ErrorDeConfiguracion("las cotas de truncamiento no pueden ser negativas")
        if self.grado_homologia + 1 > self.n_interna:
            raise ErrorDeConfiguracion(
                f"la homología hasta grado {self.grado_homologia} necesita n_interna >= {self.grado_homologia + 1}"
            )
        if self.max_longitud_palabra < 1 or self.max_pasadas_completado < 1:
            raise ErrorDeConfiguracion("max_longitud_palabra y max_pasadas_completado deben ser positivos")
        if self.presupuesto_simplices <= 0:
            raise ErrorDeConfiguracion("el presupuesto de símplices debe ser positivo")
        if self.direccion_insercion not in DIRECCIONES_DE_INSERCION:
            raise ErrorDeConfiguracion(f"dirección de inserción desconocida: {self.direccion_insercion}")
        return self

    def con(self, **cambios):
        """Copia validada con los campos dados reemplazados."""
        return replace(self, **cambios).validar()
