"""
Colímite homotópico de Bousfield-Kan de un diagrama de conjuntos simpliciales
truncados, y su versión nivel a nivel para espacios simpliciales.

Un k-símplice del hocolim es un par (c, s): c es una cadena a0 -> ... -> ak del
nervio del índice y s es un k-símplice de X(a0). La cara d_0 empuja s a lo
largo de la primera flecha de la cadena; las demás caras actúan en ambas
coordenadas.
"""

import logging
from dataclasses import dataclass

from ..configuracion import presupuesto_global
from ..errores import DiagramaNoFuntorial, ErrorDeCotas, PresupuestoExcedido
from .bisimplicial import ConjuntoBisimplicialTruncado
from .conjuntos import ConjuntoSimplicialTruncado, MapaSimplicial, componer_mapas
from .nervios import nervio

LOGGER = logging.getLogger(__name__)


@dataclass
class DiagramaSimplicial:
    """Funtor del índice a conjuntos simpliciales truncados."""

    indice: object
    valores: dict
    mapas: dict

    def origen_de_cadena(self, k, cadena):
        if k == 0:
            return cadena[0]
        return self.indice.origen(cadena[0])


def validar_diagrama(diagrama):
    """
    Revisa que los mapas respeten identidades y composición del índice.

    Returns:
        list[str]: Violaciones de funtorialidad
    """
    D = diagrama.indice
    violaciones = []
    cotas = {X.cota for X in diagrama.valores.values()}
    if len(cotas) > 1:
        raise ErrorDeCotas(f"el diagrama mezcla cotas de truncamiento {sorted(cotas)}")
    for theta in D.morfismos:
        if theta not in diagrama.mapas:
            violaciones.append(f"falta el mapa de la flecha {theta}")
    if violaciones:
        return violaciones
    for x in D.objetos:
        identidad = diagrama.mapas[D.identidad(x)]
        if any(componente != {s: s for s in grado}
               for componente, grado in zip(identidad.componentes, diagrama.valores[x].simplices)):
            violaciones.append(f"el mapa de la identidad de {x} no es la identidad")
    for psi, theta in D.pares_componibles():
        compuesto = componer_mapas(diagrama.mapas[psi], diagrama.mapas[theta])
        directo = diagrama.mapas[D.componer(psi, theta)]
        if compuesto.componentes != directo.componentes:
            violaciones.append(f"el mapa de {psi}∘{theta} no es la composición")
    return violaciones


def _exigir_funtorial(diagrama):
    violaciones = validar_diagrama(diagrama)
    if violaciones:
        raise DiagramaNoFuntorial("el diagrama no es funtorial: " + violaciones[0], violaciones)


def hocolim_bousfield_kan(diagrama, cota=None, presupuesto=None, validar=True):
    """
    Construye hocolim_D X hasta la cota común de los valores.

    Args:
        diagrama (DiagramaSimplicial): Diagrama funtorial
        cota (int): Solo se usa cuando el índice no tiene objetos
        presupuesto (int): Máximo total de símplices
        validar (bool): Verificar la funtorialidad antes de construir

    Returns:
        ConjuntoSimplicialTruncado

    Raises:
        DiagramaNoFuntorial: Si los mapas no respetan identidades o composición
    """
    if validar:
        _exigir_funtorial(diagrama)
    presupuesto = presupuesto or presupuesto_global()
    if diagrama.valores:
        cota = next(iter(diagrama.valores.values())).cota
    elif cota is None:
        raise ErrorDeCotas("un diagrama vacío necesita una cota explícita")
    cadenas = nervio(diagrama.indice, cota, presupuesto)
    simplices = []
    total = 0
    for k in range(cota + 1):
        grado = []
        for c in cadenas.simplices[k]:
            X = diagrama.valores[diagrama.origen_de_cadena(k, c)]
            grado.extend((c, s) for s in X.simplices[k])
        total += len(grado)
        if total > presupuesto:
            raise PresupuestoExcedido(f"el hocolim supera el presupuesto de {presupuesto} símplices", limite=presupuesto)
        simplices.append(grado)

    def cara(k, i, simplice):
        c, s = simplice
        X = diagrama.valores[diagrama.origen_de_cadena(k, c)]
        if i == 0:
            empujado = diagrama.mapas[c[0]](k - 1, X.cara(k, 0, s))
            return (cadenas.cara(k, 0, c), empujado)
        return (cadenas.cara(k, i, c), X.cara(k, i, s))

    def degeneracion(k, i, simplice):
        c, s = simplice
        X = diagrama.valores[diagrama.origen_de_cadena(k, c)]
        return (cadenas.degeneracion(k, i, c), X.degeneracion(k, i, s))

    LOGGER.info("hocolim de Bousfield-Kan: %d símplices hasta grado %d", total, cota)
    return ConjuntoSimplicialTruncado.construir(cota, simplices, cara, degeneracion, presupuesto)


def mapa_a_cocono(hocolim, diagrama, cocono, destino):
    """
    Mapa canónico hocolim -> Z para un cocono estricto (c, s) -> cocono[a0](s).

    Args:
        hocolim (ConjuntoSimplicialTruncado): Resultado de hocolim_bousfield_kan
        diagrama (DiagramaSimplicial): El mismo diagrama
        cocono (dict): objeto del índice -> MapaSimplicial X(objeto) -> Z
        destino (ConjuntoSimplicialTruncado): Z
    """
    componentes = []
    for k, grado in enumerate(hocolim.simplices):
        componentes.append({(c, s): cocono[diagrama.origen_de_cadena(k, c)](k, s) for c, s in grado})
    return MapaSimplicial(hocolim, destino, componentes)


def hocolim_bisimplicial(indice, valores, mapas, cota_externa=None, cota_interna=None, presupuesto=None):
    """
    Aplica Bousfield-Kan en cada nivel externo.

    Args:
        indice (CategoriaFinita): D
        valores (dict): objeto de D -> ConjuntoBisimplicialTruncado
        mapas (dict): morfismo de D -> MapaBisimplicial
        cota_externa, cota_interna (int): Solo se usan si el índice no tiene objetos

    Returns:
        ConjuntoBisimplicialTruncado: Nivel n = hocolim_D W(-)_n, con las
        estructuras externas heredadas de los valores
    """
    if valores:
        cotas_externas = {W.cota_externa for W in valores.values()}
        if len(cotas_externas) > 1:
            raise ErrorDeCotas(f"cotas externas distintas: {sorted(cotas_externas)}")
        cota_externa = cotas_externas.pop()
    elif cota_externa is None or cota_interna is None:
        raise ErrorDeCotas("un índice sin objetos necesita cotas explícitas")
    diagramas = []
    niveles = []
    for n in range(cota_externa + 1):
        diagrama = DiagramaSimplicial(
            indice,
            {alfa: W.niveles[n] for alfa, W in valores.items()},
            {theta: mapa.nivel(n) for theta, mapa in mapas.items()},
        )
        diagramas.append(diagrama)
        niveles.append(hocolim_bousfield_kan(diagrama, cota=cota_interna, presupuesto=presupuesto))

    def estructura_externa(n, m, elegir):
        componentes = []
        for k, grado in enumerate(niveles[n].simplices):
            componente = {}
            for c, s in grado:
                alfa = diagramas[n].origen_de_cadena(k, c)
                componente[(c, s)] = (c, elegir(valores[alfa])(k, s))
            componentes.append(componente)
        return MapaSimplicial(niveles[n], niveles[m], componentes)

    caras = [[]]
    for n in range(1, cota_externa + 1):
        caras.append([estructura_externa(n, n - 1, lambda W, n=n, i=i: W.cara_externa(n, i)) for i in range(n + 1)])
    degeneraciones = []
    for n in range(cota_externa):
        degeneraciones.append(
            [estructura_externa(n, n + 1, lambda W, n=n, i=i: W.degeneracion_externa(n, i)) for i in range(n + 1)]
        )
    return ConjuntoBisimplicialTruncado(niveles, caras, degeneraciones)
