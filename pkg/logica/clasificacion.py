"""
Diagrama de clasificación L_C(M) de una categoría relativa, condición de
Segal y modelo por espacios clasificantes de autoequivalencias.

El nivel externo n es el nervio truncado de we(M^[n]); las caras y
degeneraciones externas vienen de los funtores entre categorías de cadenas
que borran o repiten un vértice.
"""

import logging
from dataclasses import dataclass, field

from .categorias.relativas import (
    automorfismos_homotopicos,
    clases_de_equivalencia,
    equivalencias_de_potencia,
    potencia_de_flechas,
    potencia_de_funtor,
    subcategoria_de_equivalencias,
    vertices_de_cadena,
)
from .errores import ErrorDeCotas
from .homologia import homologia_hasta
from .simplicial.bisimplicial import ConjuntoBisimplicialTruncado, MapaBisimplicial
from .simplicial.conjuntos import (
    MapaSimplicial,
    componentes_conexas,
    componer_mapas,
    producto_fibrado,
    union_disjunta,
    validar_mapa,
)
from .simplicial.nervios import complejo_clasificante, mapa_de_nervios, nervio

LOGGER = logging.getLogger(__name__)


@dataclass
class DiagramaDeClasificacion:
    """
    Atributos:
        relativa: La categoría relativa M
        categorias: categorias[n] es we(M^[n])
        espacio: El espacio simplicial truncado con niveles N(we(M^[n]))
    """

    relativa: object
    categorias: list
    espacio: ConjuntoBisimplicialTruncado

    @property
    def niveles(self):
        return self.espacio.niveles


def _cara_de_cadena(C, cadena, i):
    n = len(cadena) - 1
    if i == 0:
        return (vertices_de_cadena(C, cadena)[1],) + cadena[2:]
    if i == n:
        return cadena[:-1]
    return cadena[:i] + (C.componer(cadena[i + 1], cadena[i]),) + cadena[i + 2:]


def _degeneracion_de_cadena(C, cadena, i):
    x_i = vertices_de_cadena(C, cadena)[i]
    return cadena[:i + 1] + (C.identidad(x_i),) + cadena[i + 1:]


def _funtor_externo(C, origen, mover_cadena, mover_componentes):
    mapa_objetos = {c: mover_cadena(c) for c in origen.objetos}
    mapa_morfismos = {
        m: (mover_cadena(m[0]), mover_cadena(m[1]), mover_componentes(m[2])) for m in origen.morfismos
    }
    return mapa_objetos, mapa_morfismos


def diagrama_de_clasificacion(relativa, n_externa=2, n_interna=4, presupuesto=None):
    """
    Construye L_C(M) truncado.

    Args:
        relativa (CategoriaRelativa): M
        n_externa (int): Último nivel externo
        n_interna (int): Grado máximo de cada nervio
        presupuesto (int): Máximo de símplices por nivel

    Returns:
        DiagramaDeClasificacion
    """
    C = relativa.base
    categorias = [equivalencias_de_potencia(relativa, n, presupuesto) for n in range(n_externa + 1)]
    niveles = [nervio(categoria, n_interna, presupuesto) for categoria in categorias]

    caras = [[]]
    for n in range(1, n_externa + 1):
        caras_n = []
        for i in range(n + 1):
            objetos, morfismos = _funtor_externo(
                C,
                categorias[n],
                lambda c, i=i: _cara_de_cadena(C, c, i),
                lambda a, i=i: a[:i] + a[i + 1:],
            )
            caras_n.append(mapa_de_nervios(niveles[n], niveles[n - 1], objetos, morfismos))
        caras.append(caras_n)

    degeneraciones = []
    for n in range(n_externa):
        degeneraciones_n = []
        for i in range(n + 1):
            objetos, morfismos = _funtor_externo(
                C,
                categorias[n],
                lambda c, i=i: _degeneracion_de_cadena(C, c, i),
                lambda a, i=i: a[:i + 1] + (a[i],) + a[i + 1:],
            )
            degeneraciones_n.append(mapa_de_nervios(niveles[n], niveles[n + 1], objetos, morfismos))
        degeneraciones.append(degeneraciones_n)

    LOGGER.info("L_C con %d niveles externos: %s", n_externa + 1, [W.total_simplices() for W in niveles])
    return DiagramaDeClasificacion(relativa, categorias, ConjuntoBisimplicialTruncado(niveles, caras, degeneraciones))


def mapa_de_clasificacion(funtor, origen, destino):
    """
    L_C(F): mapa inducido por un funtor relativo entre diagramas de clasificación.

    Args:
        funtor (FuntorRelativo): F: M -> N
        origen (DiagramaDeClasificacion): L_C(M)
        destino (DiagramaDeClasificacion): L_C(N), con las mismas cotas

    Returns:
        MapaBisimplicial
    """
    niveles = []
    for n, categoria in enumerate(origen.categorias):
        objetos, morfismos = potencia_de_funtor(funtor, categoria, destino.categorias[n])
        niveles.append(mapa_de_nervios(origen.niveles[n], destino.niveles[n], objetos, morfismos))
    return MapaBisimplicial(origen.espacio, destino.espacio, niveles)


@dataclass
class ResultadoSegal:
    nivel: int
    es_isomorfismo: bool
    contraejemplo: str = None

    def a_diccionario(self):
        return {"nivel": self.nivel, "es_isomorfismo": self.es_isomorfismo, "contraejemplo": self.contraejemplo}


def _restriccion_a_flecha(W, n, i):
    """Mapa W_n -> W_1 inducido por [1] -> [n], 0 -> i-1, 1 -> i, como composición de caras externas."""
    mapa = None
    nivel = n
    while nivel > i:
        cara = W.cara_externa(nivel, nivel)
        mapa = cara if mapa is None else componer_mapas(cara, mapa)
        nivel -= 1
    quitados = 0
    while quitados < i - 1:
        cara = W.cara_externa(nivel, 0)
        mapa = cara if mapa is None else componer_mapas(cara, mapa)
        nivel -= 1
        quitados += 1
    return mapa


def verificar_segal(espacio, n):
    """
    Compara W_n con W_1 ×_{W_0} ... ×_{W_0} W_1 (n factores).

    El mapa de Segal se arma con las caras externas y se exige que sea una
    biyección grado a grado y un mapa simplicial. No lanza si falla.

    Args:
        espacio (ConjuntoBisimplicialTruncado | DiagramaDeClasificacion): W
        n (int): Nivel, 1 <= n <= cota externa

    Returns:
        ResultadoSegal
    """
    W = espacio.espacio if isinstance(espacio, DiagramaDeClasificacion) else espacio
    if n < 1 or n > W.cota_externa:
        raise ErrorDeCotas(f"el nivel de Segal {n} está fuera de 1..{W.cota_externa}")
    W_n = W.niveles[n]
    restricciones = [_restriccion_a_flecha(W, n, i) for i in range(1, n + 1)]
    origen_1 = W.cara_externa(1, 1)
    fin_1 = W.cara_externa(1, 0)

    producto = W.niveles[1]
    fin = fin_1
    for _ in range(n - 1):
        producto = producto_fibrado(fin, origen_1)
        fin = MapaSimplicial(
            producto,
            W.niveles[0],
            [{s: fin_1(k, s[1]) for s in grado} for k, grado in enumerate(producto.simplices)],
        )

    componentes = []
    for k, grado in enumerate(W_n.simplices):
        componente = {}
        for s in grado:
            imagen = restricciones[0](k, s) if restricciones[0] is not None else s
            for restriccion in restricciones[1:]:
                imagen = (imagen, restriccion(k, s))
            componente[s] = imagen
        componentes.append(componente)
    segal = MapaSimplicial(W_n, producto, componentes)

    for k, componente in enumerate(componentes):
        vistos = {}
        for s, imagen in componente.items():
            if imagen in vistos:
                return ResultadoSegal(n, False, f"los {k}-símplices {vistos[imagen]} y {s} tienen la misma imagen")
            vistos[imagen] = s
        faltantes = [p for p in producto.simplices[k] if p not in vistos]
        if faltantes:
            return ResultadoSegal(n, False, f"el {k}-símplice {faltantes[0]} del producto fibrado no tiene preimagen")
    violaciones = validar_mapa(segal)
    if violaciones:
        return ResultadoSegal(n, False, violaciones[0])
    return ResultadoSegal(n, True)


def modelo_baut(relativa, nivel, cota, presupuesto=None):
    """
    ∐ B Aut^h(x) sobre representantes de las clases de equivalencia débil.

    Args:
        relativa (CategoriaRelativa): M
        nivel (int): 0 usa M, 1 usa M^[1]
        cota (int): Truncamiento de cada espacio clasificante

    Returns:
        ConjuntoSimplicialTruncado
    """
    if nivel not in (0, 1):
        raise ErrorDeCotas("el modelo BAut se compara en los niveles 0 y 1")
    M = relativa if nivel == 0 else potencia_de_flechas(relativa, 1, presupuesto)
    representantes = [clase[0] for clase in clases_de_equivalencia(M)]
    sumandos = [complejo_clasificante(automorfismos_homotopicos(M, x), cota, presupuesto) for x in representantes]
    return union_disjunta(sumandos, cota=cota, presupuesto=presupuesto)


@dataclass
class ReporteBaut:
    aprobado: bool
    niveles: list = field(default_factory=list)

    def a_diccionario(self):
        return {"aprobado": self.aprobado, "niveles": self.niveles}


def certificar_baut(relativa, K=3, n_interna=4, presupuesto=None):
    """
    Compara los niveles 0 y 1 de L_C(M) con el modelo BAut.

    Se exige igual número de componentes y los mismos grupos de homología en
    los grados 0..K.

    Returns:
        ReporteBaut
    """
    niveles = []
    for nivel in (0, 1):
        M = relativa if nivel == 0 else potencia_de_flechas(relativa, 1, presupuesto)
        clasificante = nervio(subcategoria_de_equivalencias(M), n_interna, presupuesto)
        modelo = modelo_baut(relativa, nivel, n_interna, presupuesto)
        homologia_lc = homologia_hasta(clasificante, K)
        homologia_modelo = homologia_hasta(modelo, K)
        componentes_lc = len(componentes_conexas(clasificante))
        componentes_modelo = len(componentes_conexas(modelo))
        niveles.append({
            "nivel": nivel,
            "aprobado": componentes_lc == componentes_modelo and homologia_lc == homologia_modelo,
            "componentes": [componentes_lc, componentes_modelo],
            "homologia_lc": [grupo.a_diccionario() for grupo in homologia_lc],
            "homologia_modelo": [grupo.a_diccionario() for grupo in homologia_modelo],
        })
    return ReporteBaut(all(nivel["aprobado"] for nivel in niveles), niveles)
