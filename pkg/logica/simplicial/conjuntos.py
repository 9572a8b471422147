"""
Conjuntos simpliciales truncados y mapas simpliciales.

Un ConjuntoSimplicialTruncado guarda, para cada grado k <= cota, sus
k-símplices ordenados, las caras d_0..d_k de cada símplice (k >= 1) y las
degeneraciones s_0..s_k (k < cota). Un símplice es degenerado si es imagen de
alguna degeneración.
"""

import logging

from ..configuracion import presupuesto_global
from ..errores import ErrorDeCotas, ErrorEstructural, PresupuestoExcedido
from ..union_find import UnionFind

LOGGER = logging.getLogger(__name__)


class ConjuntoSimplicialTruncado:
    """Conjunto simplicial con símplices hasta la cota y sus caras y degeneraciones tabuladas."""

    def __init__(self, cota, simplices, caras, degeneraciones):
        """
        Args:
            cota (int): Grado máximo N
            simplices (list): simplices[k] es la lista de k-símplices
            caras (list): caras[k][s] = (d_0 s, ..., d_k s) para k >= 1; caras[0] vacío
            degeneraciones (list): degeneraciones[k][s] = (s_0 s, ..., s_k s) para k < cota
        """
        self.cota = cota
        self.simplices = [tuple(sorted(grado)) for grado in simplices]
        self.caras = caras
        self.degeneraciones = degeneraciones
        self.degenerados = [frozenset()]
        k = 1
        while k <= cota:
            imagenes = set()
            for imagenes_de_s in degeneraciones[k - 1].values():
                imagenes.update(imagenes_de_s)
            self.degenerados.append(frozenset(imagenes))
            k += 1

    @classmethod
    def construir(cls, cota, simplices, cara, degeneracion, presupuesto=None):
        """
        Arma el conjunto evaluando funciones de cara y degeneración.

        Args:
            cota (int): Grado máximo
            simplices (list): Símplices por grado
            cara (callable): cara(k, i, s) -> d_i s
            degeneracion (callable): degeneracion(k, i, s) -> s_i s
            presupuesto (int): Máximo total de símplices

        Returns:
            ConjuntoSimplicialTruncado
        """
        presupuesto = presupuesto or presupuesto_global()
        total = sum(len(grado) for grado in simplices)
        if total > presupuesto:
            raise PresupuestoExcedido(f"{total} símplices superan el presupuesto de {presupuesto}", limite=presupuesto)
        caras = [{}]
        for k in range(1, cota + 1):
            caras.append({s: tuple(cara(k, i, s) for i in range(k + 1)) for s in simplices[k]})
        degeneraciones = []
        for k in range(cota):
            degeneraciones.append({s: tuple(degeneracion(k, i, s) for i in range(k + 1)) for s in simplices[k]})
        return cls(cota, simplices, caras, degeneraciones)

    def __repr__(self):
        return f"ConjuntoSimplicialTruncado(cota={self.cota}, conteos={self.conteos()})"

    def cara(self, k, i, s):
        """d_i del k-símplice s."""
        return self.caras[k][s][i]

    def degeneracion(self, k, i, s):
        """s_i del k-símplice s, un (k+1)-símplice; requiere k < cota."""
        return self.degeneraciones[k][s][i]

    def es_degenerado(self, k, s):
        return s in self.degenerados[k]

    def no_degenerados(self, k):
        """k-símplices que no son imagen de ninguna degeneración, en orden."""
        return [s for s in self.simplices[k] if s not in self.degenerados[k]]

    def conteos(self):
        """Número de símplices en cada grado 0..cota."""
        return [len(grado) for grado in self.simplices]

    def total_simplices(self):
        return sum(self.conteos())


def auditar_identidades(conjunto):
    """
    Revisa las identidades simpliciales en todos los grados disponibles.

    Returns:
        list[str]: Identidades violadas (vacía si todo cumple)
    """
    X = conjunto
    violaciones = []
    for k in range(2, X.cota + 1):
        for s in X.simplices[k]:
            for j in range(k + 1):
                for i in range(j):
                    if X.cara(k - 1, i, X.cara(k, j, s)) != X.cara(k - 1, j - 1, X.cara(k, i, s)):
                        violaciones.append(f"d_{i} d_{j} != d_{j - 1} d_{i} en {s}")
    for k in range(X.cota):
        for s in X.simplices[k]:
            for j in range(k + 1):
                t = X.degeneracion(k, j, s)
                for i in range(k + 2):
                    cara = X.cara(k + 1, i, t)
                    if i < j:
                        esperado = X.degeneracion(k - 1, j - 1, X.cara(k, i, s))
                    elif i in (j, j + 1):
                        esperado = s
                    else:
                        esperado = X.degeneracion(k - 1, j, X.cara(k, i - 1, s))
                    if cara != esperado:
                        violaciones.append(f"d_{i} s_{j} falla en {s}")
    for k in range(X.cota - 1):
        for s in X.simplices[k]:
            for j in range(k + 1):
                for i in range(j + 1):
                    izquierda = X.degeneracion(k + 1, i, X.degeneracion(k, j, s))
                    derecha = X.degeneracion(k + 1, j + 1, X.degeneracion(k, i, s))
                    if izquierda != derecha:
                        violaciones.append(f"s_{i} s_{j} != s_{j + 1} s_{i} en {s}")
    return violaciones


class MapaSimplicial:
    """Mapa grado a grado que conmuta con caras y degeneraciones."""

    def __init__(self, origen, destino, componentes):
        self.origen = origen
        self.destino = destino
        self.componentes = componentes

    def __call__(self, k, s):
        return self.componentes[k][s]

    def __repr__(self):
        return f"MapaSimplicial(cota={self.origen.cota})"


def validar_mapa(mapa):
    """
    Lista las fallas de un mapa simplicial: imágenes faltantes o fuera del
    destino, y conmutación con caras y degeneraciones.
    """
    f = mapa
    X, Y = f.origen, f.destino
    violaciones = []
    destino_por_grado = [set(grado) for grado in Y.simplices]
    for k in range(X.cota + 1):
        for s in X.simplices[k]:
            imagen = f.componentes[k].get(s)
            if imagen is None or imagen not in destino_por_grado[k]:
                violaciones.append(f"el {k}-símplice {s} no tiene imagen en el destino")
    if violaciones:
        return violaciones
    for k in range(1, X.cota + 1):
        for s in X.simplices[k]:
            for i in range(k + 1):
                if f(k - 1, X.cara(k, i, s)) != Y.cara(k, i, f(k, s)):
                    violaciones.append(f"no conmuta con d_{i} en {s}")
    for k in range(X.cota):
        for s in X.simplices[k]:
            for i in range(k + 1):
                if f(k + 1, X.degeneracion(k, i, s)) != Y.degeneracion(k, i, f(k, s)):
                    violaciones.append(f"no conmuta con s_{i} en {s}")
    return violaciones


def componer_mapas(g, f):
    """g∘f grado a grado."""
    componentes = [{s: g.componentes[k][t] for s, t in f.componentes[k].items()} for k in range(len(f.componentes))]
    return MapaSimplicial(f.origen, g.destino, componentes)


def mapa_identidad(conjunto):
    return MapaSimplicial(conjunto, conjunto, [{s: s for s in grado} for grado in conjunto.simplices])


def _exigir_misma_cota(conjuntos):
    cotas = {X.cota for X in conjuntos}
    if len(cotas) > 1:
        raise ErrorDeCotas(f"cotas de truncamiento distintas: {sorted(cotas)}")


def union_disjunta(conjuntos, cota=None, presupuesto=None):
    """
    Coproducto de conjuntos simpliciales truncados; los símplices son (i, s).

    Args:
        conjuntos (list): Sumandos, todos con la misma cota
        cota (int): Cota a usar cuando la lista es vacía
    """
    conjuntos = list(conjuntos)
    _exigir_misma_cota(conjuntos)
    if not conjuntos and cota is None:
        raise ErrorDeCotas("la unión de una lista vacía necesita una cota explícita")
    cota = conjuntos[0].cota if conjuntos else cota
    simplices = [[(i, s) for i, X in enumerate(conjuntos) for s in X.simplices[k]] for k in range(cota + 1)]
    return ConjuntoSimplicialTruncado.construir(
        cota,
        simplices,
        lambda k, j, s: (s[0], conjuntos[s[0]].cara(k, j, s[1])),
        lambda k, j, s: (s[0], conjuntos[s[0]].degeneracion(k, j, s[1])),
        presupuesto,
    )


def producto_fibrado(f, g, presupuesto=None):
    """
    X ×_Z Y para f: X -> Z y g: Y -> Z; los símplices son pares (x, y) con f(x) = g(y).
    """
    if f.destino is not g.destino and f.destino.simplices != g.destino.simplices:
        raise ErrorEstructural("los mapas del producto fibrado no comparten codominio")
    _exigir_misma_cota([f.origen, g.origen])
    X, Y = f.origen, g.origen
    simplices = []
    for k in range(X.cota + 1):
        por_imagen = {}
        for y in Y.simplices[k]:
            por_imagen.setdefault(g(k, y), []).append(y)
        simplices.append([(x, y) for x in X.simplices[k] for y in por_imagen.get(f(k, x), [])])
    return ConjuntoSimplicialTruncado.construir(
        X.cota,
        simplices,
        lambda k, i, s: (X.cara(k, i, s[0]), Y.cara(k, i, s[1])),
        lambda k, i, s: (X.degeneracion(k, i, s[0]), Y.degeneracion(k, i, s[1])),
        presupuesto,
    )


def componentes_conexas(conjunto):
    """
    pi_0: clases de vértices unidos por 1-símplices.

    Returns:
        list[tuple]: Componentes ordenadas, cada una con sus vértices ordenados
    """
    if conjunto.cota < 1:
        raise ErrorDeCotas("pi_0 necesita al menos los 1-símplices")
    componentes = UnionFind(conjunto.simplices[0])
    for s in conjunto.simplices[1]:
        origen = conjunto.cara(1, 1, s)
        destino = conjunto.cara(1, 0, s)
        componentes.unir(origen, destino)
    return componentes.clases()
