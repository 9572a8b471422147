"""
Categorías finitas dadas por tablas explícitas.

Una CategoriaFinita guarda sus objetos, sus morfismos con origen y destino,
la identidad de cada objeto y la tabla de composición completa. Los
identificadores son homogéneos dentro de una misma categoría (todos cadenas o
todos tuplas) y siempre se recorren en orden lexicográfico.
"""

import logging
from dataclasses import dataclass, field

from ..errores import ErrorDeValidacion

LOGGER = logging.getLogger(__name__)


def nombre_identidad(objeto):
    """Nombre implícito de la identidad de un objeto en los archivos .relcat."""
    return f"id_{objeto}"


class CategoriaFinita:
    """
    Categoría con un número finito de objetos y morfismos.

    La tabla composicion asocia al par (g, f) el morfismo g∘f y está definida
    exactamente cuando destino(f) == origen(g). El constructor no valida los
    axiomas; para eso está validar_categoria.
    """

    def __init__(self, objetos, morfismos, identidades, composicion):
        """
        Args:
            objetos (iterable): Identificadores de los objetos
            morfismos (dict): id de morfismo -> (origen, destino)
            identidades (dict): objeto -> id de su identidad
            composicion (dict): (g, f) -> g∘f
        """
        self.objetos = tuple(sorted(objetos))
        self.morfismos = {f: tuple(morfismos[f]) for f in sorted(morfismos)}
        self.identidades = dict(identidades)
        self.composicion = dict(composicion)
        self._salientes = {x: [] for x in self.objetos}
        self._entrantes = {x: [] for x in self.objetos}
        self._hom = {}
        for f, (origen, destino) in self.morfismos.items():
            self._salientes.setdefault(origen, []).append(f)
            self._entrantes.setdefault(destino, []).append(f)
            self._hom.setdefault((origen, destino), []).append(f)
        self._identidades_inversas = {f: x for x, f in self.identidades.items()}

    def __repr__(self):
        return f"CategoriaFinita({len(self.objetos)} objetos, {len(self.morfismos)} morfismos)"

    def __eq__(self, otra):
        if not isinstance(otra, CategoriaFinita):
            return NotImplemented
        return (
            self.objetos == otra.objetos
            and self.morfismos == otra.morfismos
            and self.identidades == otra.identidades
            and self.composicion == otra.composicion
        )

    def origen(self, f):
        """Dominio de f."""
        return self.morfismos[f][0]

    def destino(self, f):
        """Codominio de f."""
        return self.morfismos[f][1]

    def identidad(self, x):
        return self.identidades[x]

    def es_identidad(self, f):
        """True si f es la identidad de algún objeto."""
        return f in self._identidades_inversas

    def componer(self, g, f):
        """Devuelve g∘f (primero f, luego g)."""
        return self.composicion[(g, f)]

    def salientes(self, x):
        """Morfismos con origen x, identidad incluida."""
        return self._salientes.get(x, [])

    def entrantes(self, x):
        return self._entrantes.get(x, [])

    def hom(self, x, y):
        """Morfismos de x a y, ordenados; lista vacía si no hay."""
        return self._hom.get((x, y), [])

    def morfismos_no_identidad(self):
        """Morfismos que no son identidades, en el orden de la categoría."""
        return [f for f in self.morfismos if not self.es_identidad(f)]

    def pares_componibles(self):
        """Todos los pares (g, f) con destino(f) == origen(g), en orden determinista."""
        for f in self.morfismos:
            for g in self.salientes(self.destino(f)):
                yield g, f


@dataclass
class ReporteDeValidacion:
    """Resultado de validar_categoria: la lista de axiomas violados, vacía si es válida."""

    es_valida: bool
    violaciones: list = field(default_factory=list)


def validar_categoria(categoria):
    """
    Verifica los axiomas de categoría sobre las tablas.

    Comprueba identidades, cierre y consistencia de la composición, leyes de
    unidad y asociatividad. Nunca lanza por un axioma violado.

    Args:
        categoria (CategoriaFinita): Categoría a revisar

    Returns:
        ReporteDeValidacion: es_valida y la lista de violaciones encontradas
    """
    violaciones = []
    C = categoria

    for x in C.objetos:
        identidad = C.identidades.get(x)
        if identidad is None:
            violaciones.append(f"el objeto {x} no tiene identidad")
        elif C.morfismos.get(identidad) != (x, x):
            violaciones.append(f"la identidad {identidad} de {x} no va de {x} a {x}")

    for f, (origen, destino) in C.morfismos.items():
        if origen not in C.objetos or destino not in C.objetos:
            violaciones.append(f"el morfismo {f} usa objetos desconocidos")

    for (g, f), h in C.composicion.items():
        if f not in C.morfismos or g not in C.morfismos:
            violaciones.append(f"composición {g}∘{f} con morfismos desconocidos")
        elif C.destino(f) != C.origen(g):
            violaciones.append(f"composición {g}∘{f} definida en un par no componible")

    for g, f in C.pares_componibles():
        h = C.composicion.get((g, f))
        if h is None:
            violaciones.append(f"falta la composición {g}∘{f}")
        elif h not in C.morfismos or C.morfismos[h] != (C.origen(f), C.destino(g)):
            violaciones.append(f"la composición {g}∘{f} = {h} tiene origen o destino incorrecto")
    if violaciones:
        return ReporteDeValidacion(False, violaciones)

    for f in C.morfismos:
        id_origen = C.identidades[C.origen(f)]
        id_destino = C.identidades[C.destino(f)]
        if C.componer(f, id_origen) != f or C.componer(id_destino, f) != f:
            violaciones.append(f"ley de unidad violada en {f}")

    for f in C.morfismos:
        for g in C.salientes(C.destino(f)):
            gf = C.componer(g, f)
            for h in C.salientes(C.destino(g)):
                if C.componer(h, gf) != C.componer(C.componer(h, g), f):
                    violaciones.append(f"asociatividad violada en ({h}, {g}, {f})")

    if violaciones:
        LOGGER.debug("categoría inválida: %d violaciones", len(violaciones))
    return ReporteDeValidacion(not violaciones, violaciones)


def exigir_categoria(categoria):
    """Como validar_categoria, pero lanza ErrorDeValidacion ante la primera falla."""
    reporte = validar_categoria(categoria)
    if not reporte.es_valida:
        raise ErrorDeValidacion("la tabla no define una categoría", reporte.violaciones)
    return categoria


def desde_tablas(objetos, flechas, composiciones):
    """
    Arma una categoría agregando identidades implícitas.

    Args:
        objetos (iterable): Nombres de los objetos
        flechas (dict): Morfismos que no son identidad: nombre -> (origen, destino)
        composiciones (dict): (g, f) -> h para pares de morfismos no identidad

    Returns:
        CategoriaFinita: Con identidades id_<objeto> y sus composiciones triviales
    """
    objetos = list(objetos)
    identidades = {x: nombre_identidad(x) for x in objetos}
    morfismos = dict(flechas)
    for x, identidad in identidades.items():
        morfismos[identidad] = (x, x)
    composicion = dict(composiciones)
    for f, (origen, destino) in morfismos.items():
        composicion[(f, identidades[origen])] = f
        composicion[(identidades[destino], f)] = f
    return CategoriaFinita(objetos, morfismos, identidades, composicion)


def categoria_opuesta(categoria):
    """Misma colección de morfismos con origen y destino intercambiados."""
    morfismos = {f: (destino, origen) for f, (origen, destino) in categoria.morfismos.items()}
    composicion = {(f, g): h for (g, f), h in categoria.composicion.items()}
    return CategoriaFinita(categoria.objetos, morfismos, categoria.identidades, composicion)


def categoria_discreta(objetos):
    return desde_tablas(objetos, {}, {})


def categoria_terminal(objeto="pt"):
    return categoria_discreta([objeto])

