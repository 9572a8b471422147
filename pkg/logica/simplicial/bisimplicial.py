"""
Espacios simpliciales truncados: una sucesión de conjuntos simpliciales
truncados (los niveles externos) con caras y degeneraciones externas que son
mapas simpliciales.
"""

from dataclasses import dataclass

from ..errores import ErrorDeCotas
from .conjuntos import componer_mapas


@dataclass
class ConjuntoBisimplicialTruncado:
    """
    Atributos:
        niveles: niveles[n] es W_n, todos con la misma cota interna
        caras_externas: caras_externas[n][i] es d_i: W_n -> W_{n-1} (vacía para n = 0)
        degeneraciones_externas: degeneraciones_externas[n][i] es s_i: W_n -> W_{n+1}
    """

    niveles: list
    caras_externas: list
    degeneraciones_externas: list

    def __post_init__(self):
        cotas = {W.cota for W in self.niveles}
        if len(cotas) > 1:
            raise ErrorDeCotas(f"niveles externos con cotas internas distintas: {sorted(cotas)}")

    @property
    def cota_externa(self):
        return len(self.niveles) - 1

    @property
    def cota_interna(self):
        return self.niveles[0].cota

    def cara_externa(self, n, i):
        return self.caras_externas[n][i]

    def degeneracion_externa(self, n, i):
        return self.degeneraciones_externas[n][i]


def _iguales(f, g):
    return all(f.componentes[k] == g.componentes[k] for k in range(len(f.componentes)))


def auditar_identidades_externas(bisimplicial):
    """Identidades simpliciales de la dirección externa, comparando mapas grado a grado."""
    W = bisimplicial
    violaciones = []
    for n in range(2, W.cota_externa + 1):
        for j in range(n + 1):
            for i in range(j):
                izquierda = componer_mapas(W.cara_externa(n - 1, i), W.cara_externa(n, j))
                derecha = componer_mapas(W.cara_externa(n - 1, j - 1), W.cara_externa(n, i))
                if not _iguales(izquierda, derecha):
                    violaciones.append(f"d_{i} d_{j} externo falla en el nivel {n}")
    for n in range(W.cota_externa):
        for j in range(n + 1):
            s = W.degeneracion_externa(n, j)
            for i in (j, j + 1):
                compuesto = componer_mapas(W.cara_externa(n + 1, i), s)
                if any(compuesto.componentes[k] != {x: x for x in W.niveles[n].simplices[k]}
                       for k in range(W.cota_interna + 1)):
                    violaciones.append(f"d_{i} s_{j} externo no es la identidad en el nivel {n}")
    return violaciones


@dataclass
class MapaBisimplicial:
    """Un mapa simplicial por nivel externo, natural respecto de caras y degeneraciones."""

    origen: ConjuntoBisimplicialTruncado
    destino: ConjuntoBisimplicialTruncado
    niveles: list

    def nivel(self, n):
        return self.niveles[n]


def validar_naturalidad(mapa):
    violaciones = []
    W, V = mapa.origen, mapa.destino
    for n in range(1, W.cota_externa + 1):
        for i in range(n + 1):
            if not _iguales(componer_mapas(mapa.nivel(n - 1), W.cara_externa(n, i)),
                            componer_mapas(V.cara_externa(n, i), mapa.nivel(n))):
                violaciones.append(f"no conmuta con la cara externa d_{i} del nivel {n}")
    return violaciones


def componer_mapas_bisimpliciales(g, f):
    return MapaBisimplicial(f.origen, g.destino, [componer_mapas(gn, fn) for gn, fn in zip(g.niveles, f.niveles)])
