"""
Nervio de una categoría finita y complejo clasificante de un monoide.

Convención de símplices: un 0-símplice es (x,) y un k-símplice (k >= 1) es la
tupla (f1, ..., fk) de la cadena x0 -> x1 -> ... -> xk. Así un símplice es
degenerado exactamente cuando contiene una identidad.
"""

import logging

from ..categorias.categoria_finita import CategoriaFinita
from ..configuracion import presupuesto_global
from ..errores import PresupuestoExcedido
from .conjuntos import ConjuntoSimplicialTruncado, MapaSimplicial

LOGGER = logging.getLogger(__name__)

OBJETO_DEL_MONOIDE = "*"


def _vertice(categoria, simplice, i):
    if i == 0:
        return categoria.origen(simplice[0])
    return categoria.destino(simplice[i - 1])


def nervio(categoria, cota, presupuesto=None):
    """
    Nervio truncado N(C)_{<= cota}.

    Args:
        categoria (CategoriaFinita): C
        cota (int): Grado máximo
        presupuesto (int): Máximo total de símplices

    Returns:
        ConjuntoSimplicialTruncado
    """
    C = categoria
    presupuesto = presupuesto or presupuesto_global()
    simplices = [[(x,) for x in C.objetos]]
    total = len(simplices[0])
    if cota >= 1:
        simplices.append([(f,) for f in C.morfismos])
        total += len(simplices[1])
    k = 2
    while k <= cota:
        extendidos = []
        for s in simplices[-1]:
            for f in C.salientes(C.destino(s[-1])):
                extendidos.append(s + (f,))
        total += len(extendidos)
        if total > presupuesto:
            raise PresupuestoExcedido(f"el nervio supera el presupuesto de {presupuesto} símplices", limite=presupuesto)
        simplices.append(extendidos)
        k += 1

    def cara(k, i, s):
        if k == 1:
            return (C.destino(s[0]),) if i == 0 else (C.origen(s[0]),)
        if i == 0:
            return s[1:]
        if i == k:
            return s[:-1]
        return s[:i - 1] + (C.componer(s[i], s[i - 1]),) + s[i + 1:]

    def degeneracion(k, i, s):
        if k == 0:
            return (C.identidad(s[0]),)
        return s[:i] + (C.identidad(_vertice(C, s, i)),) + s[i:]

    LOGGER.debug("nervio de %r hasta grado %d: %d símplices", C, cota, total)
    return ConjuntoSimplicialTruncado.construir(cota, simplices, cara, degeneracion, presupuesto)


def mapa_de_nervios(origen, destino, mapa_objetos, mapa_morfismos):
    """
    N(F): N(C) -> N(D) inducido por un funtor dado por sus dos mapas.

    Args:
        origen (ConjuntoSimplicialTruncado): N(C)
        destino (ConjuntoSimplicialTruncado): N(D)
        mapa_objetos (dict): Objetos de C -> objetos de D
        mapa_morfismos (dict): Morfismos de C -> morfismos de D
    """
    componentes = [{(x,): (mapa_objetos[x],) for (x,) in origen.simplices[0]}]
    for grado in origen.simplices[1:]:
        componentes.append({s: tuple(mapa_morfismos[f] for f in s) for s in grado})
    return MapaSimplicial(origen, destino, componentes)


def categoria_de_un_objeto(monoide):
    """El monoide visto como categoría con el único objeto *."""
    morfismos = {a: (OBJETO_DEL_MONOIDE, OBJETO_DEL_MONOIDE) for a in monoide.elementos}
    return CategoriaFinita([OBJETO_DEL_MONOIDE], morfismos, {OBJETO_DEL_MONOIDE: monoide.unidad}, monoide.producto)


def complejo_clasificante(monoide, cota, presupuesto=None):
    """B M truncado: el nervio del monoide como categoría de un objeto."""
    return nervio(categoria_de_un_objeto(monoide), cota, presupuesto)
