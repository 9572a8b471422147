"""
Categorías relativas: una categoría finita con una subcategoría marcada de
equivalencias débiles.

Incluye funtores relativos, las categorías de flechas iteradas M^[n], las
clases de equivalencia débil, los monoides de autoequivalencias y la clausura
dos-de-tres de un marcado.
"""

import logging
from dataclasses import dataclass, field

from ..configuracion import presupuesto_global
from ..errores import ErrorEstructural, ErrorDeValidacion, PresupuestoExcedido
from ..union_find import UnionFind
from .categoria_finita import CategoriaFinita, categoria_opuesta

LOGGER = logging.getLogger(__name__)


class CategoriaRelativa:
    """
    Par (categoría, marcado). Las identidades siempre quedan marcadas.
    """

    def __init__(self, base, marcados=()):
        """
        Args:
            base (CategoriaFinita): Categoría subyacente
            marcados (iterable): Morfismos marcados como equivalencias débiles
        """
        self.base = base
        marcados = set(marcados)
        desconocidos = sorted(str(f) for f in marcados if f not in base.morfismos)
        if desconocidos:
            raise ErrorDeValidacion("se marcaron morfismos inexistentes", desconocidos)
        marcados.update(base.identidades.values())
        self.marcados = frozenset(marcados)

    def __repr__(self):
        return f"CategoriaRelativa({self.base!r}, {len(self.marcados)} marcados)"

    def __eq__(self, otra):
        if not isinstance(otra, CategoriaRelativa):
            return NotImplemented
        return self.base == otra.base and self.marcados == otra.marcados

    def es_marcado(self, f):
        return f in self.marcados

    def marcados_ordenados(self):
        return [f for f in self.base.morfismos if f in self.marcados]

    def opuesta(self):
        return CategoriaRelativa(categoria_opuesta(self.base), self.marcados)


def validar_marcado(relativa):
    """Pares (g, f) de marcados cuya composición no está marcada."""
    M = relativa
    violaciones = []
    for g, f in M.base.pares_componibles():
        if f in M.marcados and g in M.marcados and M.base.componer(g, f) not in M.marcados:
            violaciones.append(f"{g}∘{f} no está marcado")
    return violaciones


@dataclass
class FuntorRelativo:
    """Funtor que envía marcados a marcados."""

    origen: CategoriaRelativa
    destino: CategoriaRelativa
    mapa_objetos: dict
    mapa_morfismos: dict

    def objeto(self, x):
        return self.mapa_objetos[x]

    def morfismo(self, f):
        return self.mapa_morfismos[f]


def validar_funtor(funtor):
    """
    Lista las leyes de funtor relativo que no se cumplen.

    Returns:
        list[str]: Violaciones (vacía si el funtor es válido)
    """
    F = funtor
    C = F.origen.base
    D = F.destino.base
    violaciones = []
    for x in C.objetos:
        if F.mapa_objetos.get(x) not in D.objetos:
            violaciones.append(f"el objeto {x} no tiene imagen válida")
    for f in C.morfismos:
        if F.mapa_morfismos.get(f) not in D.morfismos:
            violaciones.append(f"el morfismo {f} no tiene imagen válida")
    if violaciones:
        return violaciones
    for f, (origen, destino) in C.morfismos.items():
        if D.morfismos[F.morfismo(f)] != (F.objeto(origen), F.objeto(destino)):
            violaciones.append(f"la imagen de {f} tiene extremos incorrectos")
    for x in C.objetos:
        if F.morfismo(C.identidad(x)) != D.identidad(F.objeto(x)):
            violaciones.append(f"no preserva la identidad de {x}")
    if violaciones:
        return violaciones
    for g, f in C.pares_componibles():
        if F.morfismo(C.componer(g, f)) != D.componer(F.morfismo(g), F.morfismo(f)):
            violaciones.append(f"no preserva la composición {g}∘{f}")
    for f in F.origen.marcados:
        if F.morfismo(f) not in F.destino.marcados:
            violaciones.append(f"el marcado {f} va a un morfismo no marcado")
    return violaciones


def funtor_identidad(relativa):
    return FuntorRelativo(
        relativa,
        relativa,
        {x: x for x in relativa.base.objetos},
        {f: f for f in relativa.base.morfismos},
    )


def componer_funtores(G, F):
    """Devuelve G∘F."""
    return FuntorRelativo(
        F.origen,
        G.destino,
        {x: G.objeto(y) for x, y in F.mapa_objetos.items()},
        {f: G.morfismo(g) for f, g in F.mapa_morfismos.items()},
    )


def funtor_opuesto(funtor):
    return FuntorRelativo(funtor.origen.opuesta(), funtor.destino.opuesta(), funtor.mapa_objetos, funtor.mapa_morfismos)


@dataclass
class MonoideFinito:
    """Monoide finito con tabla de multiplicación; a·b significa a∘b."""

    elementos: tuple
    unidad: object
    producto: dict = field(default_factory=dict)

    def multiplicar(self, a, b):
        return self.producto[(a, b)]


def vertices_de_cadena(categoria, cadena):
    """Objetos x0, ..., xn de una cadena (x0, f1, ..., fn)."""
    vertices = [cadena[0]]
    for f in cadena[1:]:
        vertices.append(categoria.destino(f))
    return vertices


def cadenas_componibles(categoria, n):
    """Objetos de C^[n]: tuplas (x0, f1, ..., fn) de flechas componibles."""
    cadenas = [(x,) for x in categoria.objetos]
    paso = 0
    while paso < n:
        extendidas = []
        for cadena in cadenas:
            ultimo = cadena[0] if len(cadena) == 1 else categoria.destino(cadena[-1])
            for f in categoria.salientes(ultimo):
                extendidas.append(cadena + (f,))
        cadenas = extendidas
        paso += 1
    return sorted(cadenas)


def _escaleras_desde(C, cadena, admitido):
    """
    Morfismos de C^[n] que salen de una cadena: escaleras conmutativas.

    Cada componente a_i sale de x_i; la cadena de llegada se construye a la vez
    exigiendo d_i∘a_{i-1} = a_i∘f_i.
    """
    vertices = vertices_de_cadena(C, cadena)
    n = len(cadena) - 1
    resultado = []

    def extender(i, componentes, llegada):
        if i > n:
            resultado.append((cadena, tuple(llegada), tuple(componentes)))
            return
        for a in C.salientes(vertices[i]):
            if not admitido(a):
                continue
            if i == 0:
                extender(1, [a], [C.destino(a)])
                continue
            anterior = componentes[-1]
            objetivo = C.componer(a, cadena[i])
            for d in C.hom(C.destino(anterior), C.destino(a)):
                if C.componer(d, anterior) == objetivo:
                    extender(i + 1, componentes + [a], llegada + [d])

    extender(0, [], [])
    return resultado


def _potencia(M, n, solo_marcados, presupuesto):
    C = M.base
    presupuesto = presupuesto or presupuesto_global()
    if solo_marcados:
        admitido = M.es_marcado
    else:
        def admitido(_):
            return True
    objetos = cadenas_componibles(C, n)
    morfismos = {}
    identidades = {}
    for cadena in objetos:
        for escalera in _escaleras_desde(C, cadena, admitido):
            morfismos[escalera] = (escalera[0], escalera[1])
            if len(morfismos) > presupuesto:
                raise PresupuestoExcedido(f"M^[{n}] tiene más de {presupuesto} morfismos", limite=presupuesto)
        vertices = vertices_de_cadena(C, cadena)
        identidades[cadena] = (cadena, cadena, tuple(C.identidad(x) for x in vertices))
    salientes = {}
    for escalera in morfismos:
        salientes.setdefault(escalera[0], []).append(escalera)
    composicion = {}
    for f in morfismos:
        for g in salientes.get(f[1], []):
            componentes = tuple(C.componer(b, a) for b, a in zip(g[2], f[2]))
            composicion[(g, f)] = (f[0], g[1], componentes)
    base = CategoriaFinita(objetos, morfismos, identidades, composicion)
    marcados = [f for f in morfismos if all(M.es_marcado(a) for a in f[2])]
    LOGGER.debug("M^[%d]: %d objetos, %d morfismos", n, len(objetos), len(morfismos))
    return CategoriaRelativa(base, marcados)


def potencia_de_flechas(relativa, n, presupuesto=None):
    """
    Categoría relativa M^[n] de cadenas de n flechas componibles.

    Los morfismos son escaleras conmutativas (cadena origen, cadena destino,
    componentes) y una escalera está marcada si todas sus componentes lo están.

    Args:
        relativa (CategoriaRelativa): M
        n (int): Número de flechas de cada cadena (n = 0 da una copia de M)
        presupuesto (int): Máximo de morfismos a enumerar

    Returns:
        CategoriaRelativa: M^[n]
    """
    return _potencia(relativa, n, False, presupuesto)


def equivalencias_de_potencia(relativa, n, presupuesto=None):
    """we(M^[n]) enumerada directamente, sin pasar por las escaleras no marcadas."""
    return _potencia(relativa, n, True, presupuesto).base


def subcategoria_de_equivalencias(relativa):
    """
    we(M): mismos objetos, solo los morfismos marcados.

    Raises:
        ErrorEstructural: Si el marcado no es cerrado bajo composición
    """
    violaciones = validar_marcado(relativa)
    if violaciones:
        raise ErrorEstructural("el marcado no es cerrado bajo composición: " + violaciones[0])
    C = relativa.base
    morfismos = {f: C.morfismos[f] for f in relativa.marcados_ordenados()}
    composicion = {
        (g, f): h for (g, f), h in C.composicion.items() if f in relativa.marcados and g in relativa.marcados
    }
    return CategoriaFinita(C.objetos, morfismos, C.identidades, composicion)


def clases_de_equivalencia(relativa):
    """Componentes conexas de we(M), ordenadas."""
    clases = UnionFind(relativa.base.objetos)
    for f in relativa.marcados_ordenados():
        clases.unir(relativa.base.origen(f), relativa.base.destino(f))
    return clases.clases()


def automorfismos_homotopicos(relativa, x):
    """
    Monoide de endomorfismos marcados de x con la composición.

    Args:
        relativa (CategoriaRelativa): M
        x: Objeto de M

    Returns:
        MonoideFinito: Aut^h(x) en su versión discreta
    """
    C = relativa.base
    elementos = tuple(f for f in C.hom(x, x) if f in relativa.marcados)
    producto = {(a, b): C.componer(a, b) for a in elementos for b in elementos}
    return MonoideFinito(elementos, C.identidad(x), producto)


def clausura_dos_de_tres(relativa):
    """
    Menor marcado que contiene al dado y cumple dos-de-tres.

    Se satura hasta un punto fijo: si dos de f, g, g∘f están marcados, el
    tercero también.
    """
    C = relativa.base
    marcados = set(relativa.marcados)
    pares = list(C.pares_componibles())
    cambio = True
    while cambio:
        cambio = False
        for g, f in pares:
            h = C.componer(g, f)
            presentes = (f in marcados) + (g in marcados) + (h in marcados)
            if presentes == 2:
                marcados.update((f, g, h))
                cambio = True
    return CategoriaRelativa(C, marcados)


def potencia_de_funtor(funtor, origen_n, destino_n):
    """
    F^[n]: aplica F a cadenas y escaleras.

    Args:
        funtor (FuntorRelativo): F
        origen_n (CategoriaFinita): Una subcategoría de M^[n] (p. ej. we(M^[n]))
        destino_n (CategoriaFinita): La correspondiente de N^[n]

    Returns:
        tuple: (mapa de objetos, mapa de morfismos)
    """
    F = funtor

    def cadena(c):
        return (F.objeto(c[0]),) + tuple(F.morfismo(f) for f in c[1:])

    mapa_objetos = {c: cadena(c) for c in origen_n.objetos}
    mapa_morfismos = {}
    for m in origen_n.morfismos:
        imagen = (cadena(m[0]), cadena(m[1]), tuple(F.morfismo(a) for a in m[2]))
        if imagen not in destino_n.morfismos:
            raise ErrorEstructural(f"la imagen de la escalera {m} no está en el destino")
        mapa_morfismos[m] = imagen
    return mapa_objetos, mapa_morfismos
