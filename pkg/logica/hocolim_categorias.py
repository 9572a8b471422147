"""
Colímite homotópico de un diagrama de categorías relativas.

Se parte de la unión disjunta de las categorías del diagrama, se inserta una
flecha formal (marcada) por cada testigo de cada sitio de inserción y se
imponen las identificaciones entre inserciones compuestas. La presentación resultante se
completa con Knuth-Bendix y se enumera como categoría finita.

Nombres: los objetos son "<a>/<x>", los generadores internos "<a>/<f>" y los
insertados "ins[<flecha>|<x>|<y>]", con "|<testigo>" al final si el sitio
tiene varios testigos.
"""

import logging
from dataclasses import dataclass, field

from .categorias.categoria_finita import desde_tablas, nombre_identidad
from .categorias.categoria_presentada import CategoriaPresentada
from .categorias.relativas import (
    CategoriaRelativa,
    FuntorRelativo,
    clausura_dos_de_tres,
    componer_funtores,
    funtor_opuesto,
    validar_funtor,
)
from .configuracion import DIRECCIONES_DE_INSERCION, VARIANZAS
from .errores import DiagramaNoFuntorial, ErrorDeConfiguracion, ErrorEstructural

LOGGER = logging.getLogger(__name__)


@dataclass
class DiagramaDeCategoriasRelativas:
    """
    Funtor del índice D a categorías relativas.

    funtores tiene una entrada por cada morfismo de D, identidades y
    composiciones incluidas.
    """

    indice: object
    valores: dict
    funtores: dict
    varianza: str = "left"

    def funtor(self, theta):
        """FuntorRelativo asignado a la flecha theta del índice."""
        return self.funtores[theta]

    def opuesto(self, varianza=None):
        """Cada M_a reemplazada por M_a^op, con los mismos funtores; por defecto invierte la varianza."""
        if varianza is None:
            varianza = "right" if self.varianza == "left" else "left"
        valores = {alfa: M.opuesta() for alfa, M in self.valores.items()}
        funtores = {theta: funtor_opuesto(F) for theta, F in self.funtores.items()}
        return DiagramaDeCategoriasRelativas(self.indice, valores, funtores, varianza)


def validar_diagrama_relativo(diagrama):
    """
    Revisa que cada funtor sea relativo, vaya entre las categorías correctas y
    que el diagrama respete identidades y composición.

    Returns:
        list[str]: Violaciones
    """
    D = diagrama.indice
    violaciones = []
    if diagrama.varianza not in VARIANZAS:
        violaciones.append(f"varianza desconocida {diagrama.varianza}")
    for alfa in D.objetos:
        if alfa not in diagrama.valores:
            violaciones.append(f"falta la categoría del objeto {alfa}")
    for theta in D.morfismos:
        F = diagrama.funtores.get(theta)
        if F is None:
            violaciones.append(f"falta el funtor de la flecha {theta}")
            continue
        if F.origen != diagrama.valores.get(D.origen(theta)) or F.destino != diagrama.valores.get(D.destino(theta)):
            violaciones.append(f"el funtor de {theta} no va entre las categorías de sus extremos")
            continue
        violaciones += [f"{theta}: {v}" for v in validar_funtor(F)]
    if violaciones:
        return violaciones
    for alfa in D.objetos:
        F = diagrama.funtor(D.identidad(alfa))
        if any(F.objeto(x) != x for x in F.origen.base.objetos) or any(
            F.morfismo(f) != f for f in F.origen.base.morfismos
        ):
            violaciones.append(f"el funtor de la identidad de {alfa} no es la identidad")
    for psi, theta in D.pares_componibles():
        compuesto = componer_funtores(diagrama.funtor(psi), diagrama.funtor(theta))
        directo = diagrama.funtor(D.componer(psi, theta))
        if compuesto.mapa_objetos != directo.mapa_objetos or compuesto.mapa_morfismos != directo.mapa_morfismos:
            violaciones.append(f"el funtor de {psi}∘{theta} no es la composición")
    return violaciones


def exigir_diagrama(diagrama):
    violaciones = validar_diagrama_relativo(diagrama)
    if violaciones:
        raise DiagramaNoFuntorial("el diagrama no es funtorial: " + violaciones[0], violaciones)
    return diagrama


def _categoria_de_testigos(diagrama, alfa):
    """M_a tal como la leen los testigos: la opuesta cuando la varianza es derecha."""
    M = diagrama.valores[alfa]
    return M if diagrama.varianza == "left" else M.opuesta()


def testigos_de_insercion(diagrama, theta):
    """
    Ternas (x, y, w), x en M_a e y en M_b, donde w es un marcado que pide una
    flecha insertada para theta: a -> b.

    Varianza izquierda: w: F(x) -> y. Varianza derecha: w: y -> F(x).

    Returns:
        list[tuple]: Ternas ordenadas por x, y y luego w
    """
    D = diagrama.indice
    M_alfa = diagrama.valores[D.origen(theta)]
    M_beta = _categoria_de_testigos(diagrama, D.destino(theta))
    F = diagrama.funtor(theta)
    testigos = []
    for x in M_alfa.base.objetos:
        imagen = F.objeto(x)
        for y in M_beta.base.objetos:
            testigos += [(x, y, w) for w in M_beta.base.hom(imagen, y) if M_beta.es_marcado(w)]
    return testigos


def sitios_de_insercion(diagrama, theta):
    """
    Pares (x, y) con al menos un testigo marcado.

    Returns:
        list[tuple]: Sitios ordenados
    """
    sitios = []
    for x, y, _ in testigos_de_insercion(diagrama, theta):
        if not sitios or sitios[-1] != (x, y):
            sitios.append((x, y))
    return sitios


def nombre_de_objeto(alfa, x):
    return f"{alfa}/{x}"


def nombre_de_generador(alfa, f):
    return f"{alfa}/{f}"


def nombre_de_insercion(theta, x, y, testigo=None):
    """ins[theta|x|y], con el testigo al final cuando el sitio tiene más de uno."""
    if testigo is None:
        return f"ins[{theta}|{x}|{y}]"
    return f"ins[{theta}|{x}|{y}|{testigo}]"


def _extremos_de_insercion(diagrama, direccion, theta, x, y):
    """Origen y destino en H de la flecha insertada para el sitio (x, y)."""
    D = diagrama.indice
    x_alfa = nombre_de_objeto(D.origen(theta), x)
    y_beta = nombre_de_objeto(D.destino(theta), y)
    hacia_adelante = (diagrama.varianza == "left") == (direccion == "forward")
    return (x_alfa, y_beta) if hacia_adelante else (y_beta, x_alfa)


@dataclass(frozen=True)
class FlechaDeInsercion:
    """
    Flecha (theta, w) de x en M_a a y en M_b, con w marcado en la categoría
    de testigos de M_b. Con theta identidad es el marcado interno w.

    palabra es su realización en H; invertida indica que esa realización va
    de y a x.
    """

    theta: object
    x: object
    y: object
    testigo: object
    palabra: tuple
    invertida: bool


# Cómo se escribe en H la identificación A·B = C según qué flechas quedan
# invertidas: (lado izquierdo, lado derecho) en términos de a, b, c.
_IDENTIFICACIONES = {
    (False, False, False): ("ab", "c"),
    (True, True, True): ("ba", "c"),
    (True, False, False): ("ac", "b"),
    (False, True, False): ("cb", "a"),
    (True, False, True): ("bc", "a"),
    (False, True, True): ("ca", "b"),
}


@dataclass
class CategoriaHocolim:
    """
    Atributos:
        diagrama: Diagrama de origen
        direccion: "forward" o "paper-literal"
        presentacion: CategoriaPresentada con todas las relaciones
        relativa: Categoría relativa finita resultante
        insertados: (theta, x, y, w) -> nombre del generador insertado con testigo w
        sustitutos: (theta, x, y, w) -> marcado interno w que hace de inserción
    """

    diagrama: DiagramaDeCategoriasRelativas
    direccion: str
    presentacion: CategoriaPresentada
    relativa: CategoriaRelativa
    insertados: dict = field(default_factory=dict)
    sustitutos: dict = field(default_factory=dict)

    @property
    def base(self):
        """Categoría finita subyacente de H."""
        return self.relativa.base

    def morfismo(self, origen, palabra):
        """Nombre en H del morfismo representado por una palabra."""
        return self.presentacion.nombre_de_palabra(origen, palabra)

    def incluir(self, alfa, f):
        """Imagen en H del morfismo f de M_a."""
        M = self.diagrama.valores[alfa]
        origen = nombre_de_objeto(alfa, M.base.origen(f))
        if M.base.es_identidad(f):
            return nombre_identidad(origen)
        return self.morfismo(origen, (nombre_de_generador(alfa, f),))


def categoria_hocolim(diagrama, direccion="forward", max_longitud_palabra=8, max_pasadas_completado=20):
    """
    Construye la categoría relativa hocolim del diagrama.

    Args:
        diagrama (DiagramaDeCategoriasRelativas): Diagrama funtorial
        direccion (str): "forward" (flechas alineadas con el testigo) o "paper-literal"
        max_longitud_palabra (int): Cota de las formas normales
        max_pasadas_completado (int): Rondas de Knuth-Bendix

    Returns:
        CategoriaHocolim

    Raises:
        DiagramaNoFuntorial: Si el diagrama no es funtorial
        ErrorDeConfluencia: Si el completado no converge
        PresupuestoExcedido: Si la categoría no cierra dentro de la cota de palabras
    """
    if direccion not in DIRECCIONES_DE_INSERCION:
        raise ErrorDeConfiguracion(f"dirección de inserción desconocida: {direccion}")
    exigir_diagrama(diagrama)
    D = diagrama.indice

    objetos = []
    generadores = {}
    relaciones = []
    marcados = []
    for alfa in D.objetos:
        C = diagrama.valores[alfa].base
        objetos += [nombre_de_objeto(alfa, x) for x in C.objetos]
        for f in C.morfismos_no_identidad():
            generadores[nombre_de_generador(alfa, f)] = (
                nombre_de_objeto(alfa, C.origen(f)),
                nombre_de_objeto(alfa, C.destino(f)),
            )
            if diagrama.valores[alfa].es_marcado(f):
                marcados.append(nombre_de_generador(alfa, f))

        def palabra(h, alfa=alfa, C=C):
            return () if C.es_identidad(h) else (nombre_de_generador(alfa, h),)

        for g, f in C.pares_componibles():
            if C.es_identidad(f) or C.es_identidad(g):
                continue
            relaciones.append(((nombre_de_generador(alfa, f), nombre_de_generador(alfa, g)), palabra(C.componer(g, f))))

    testigos = {alfa: _categoria_de_testigos(diagrama, alfa) for alfa in D.objetos}
    interna_invertida = diagrama.varianza == "right"
    # la inserción realizada en H va de y a x
    insercion_invertida = (diagrama.varianza == "left") != (direccion == "forward")
    insertados = {}
    sustitutos = {}
    flechas = []
    for theta in D.morfismos:
        alfa, beta = D.origen(theta), D.destino(theta)
        M_alfa = diagrama.valores[alfa]
        C_alfa = testigos[alfa].base
        if D.es_identidad(theta):
            # a lo largo de una identidad el testigo ya es la equivalencia débil
            for f in M_alfa.marcados_ordenados():
                if not C_alfa.es_identidad(f):
                    flechas.append(FlechaDeInsercion(
                        theta, C_alfa.origen(f), C_alfa.destino(f), f,
                        (nombre_de_generador(alfa, f),), interna_invertida,
                    ))
            continue
        F = diagrama.funtor(theta)
        funtor_identidad = alfa == beta and all(F.objeto(x) == x for x in M_alfa.base.objetos) and all(
            F.morfismo(f) == f for f in M_alfa.base.morfismos
        )
        por_sitio = {}
        for x, y, w in testigos_de_insercion(diagrama, theta):
            por_sitio.setdefault((x, y), []).append(w)
        for (x, y), ws in por_sitio.items():
            origen, destino = _extremos_de_insercion(diagrama, direccion, theta, x, y)
            for w in ws:
                if funtor_identidad and insercion_invertida == interna_invertida:
                    sustitutos[(theta, x, y, w)] = w
                    palabra_w = () if C_alfa.es_identidad(w) else (nombre_de_generador(alfa, w),)
                    flechas.append(FlechaDeInsercion(theta, x, y, w, palabra_w, insercion_invertida))
                    continue
                nombre = nombre_de_insercion(theta, x, y, w if len(ws) > 1 else None)
                generadores[nombre] = (origen, destino)
                insertados[(theta, x, y, w)] = nombre
                marcados.append(nombre)
                flechas.append(FlechaDeInsercion(theta, x, y, w, (nombre,), insercion_invertida))

    relaciones += _identificaciones_de_composicion(diagrama, testigos, flechas)

    presentacion = CategoriaPresentada(
        objetos, generadores, relaciones,
        max_longitud_palabra=max_longitud_palabra, max_pasadas_completado=max_pasadas_completado,
    )
    finita = presentacion.a_categoria_finita()
    nombres_marcados = {presentacion.nombre_de_palabra(generadores[g][0], (g,)) for g in marcados}
    relativa = clausura_dos_de_tres(CategoriaRelativa(finita, nombres_marcados))
    LOGGER.info(
        "hocolim (%s, %s): %d objetos, %d morfismos, %d insertados",
        diagrama.varianza, direccion, len(finita.objetos), len(finita.morfismos), len(insertados),
    )
    return CategoriaHocolim(diagrama, direccion, presentacion, relativa, insertados, sustitutos)


def _identificaciones_de_composicion(diagrama, testigos, flechas):
    """
    Relaciones entre inserciones compuestas.

    Para A = (theta, w) de x a y y B = (psi, v) de y a z, no ambas internas, la
    compuesta es (psi∘theta, v∘F_psi(w)). Se identifica A·B con la flecha
    de ese mismo testigo y se omite si el testigo compuesto no está marcado o
    psi∘theta es una identidad. Las flechas invertidas en H entran como inversas
    formales y la relación se despeja sin ellas.
    """
    D = diagrama.indice
    por_clave = {(f.theta, f.x, f.y, f.testigo): f for f in flechas}
    salientes = {}
    for flecha in flechas:
        salientes.setdefault((D.origen(flecha.theta), flecha.x), []).append(flecha)
    relaciones = []
    for primera in flechas:
        for segunda in salientes.get((D.destino(primera.theta), primera.y), []):
            if D.es_identidad(primera.theta) and D.es_identidad(segunda.theta):
                continue
            chi = D.componer(segunda.theta, primera.theta)
            if D.es_identidad(chi):
                continue
            C_gamma = testigos[D.destino(chi)].base
            imagen = diagrama.funtor(segunda.theta).morfismo(primera.testigo)
            compuesta = por_clave.get((chi, primera.x, segunda.y, C_gamma.componer(segunda.testigo, imagen)))
            if compuesta is None:
                continue
            palabras = {"a": primera.palabra, "b": segunda.palabra, "c": compuesta.palabra}
            izquierda, derecha = _IDENTIFICACIONES[(primera.invertida, segunda.invertida, compuesta.invertida)]
            relacion = (palabras[izquierda[0]] + palabras[izquierda[1]], palabras[derecha])
            if relacion[0] != relacion[1]:
                relaciones.append(relacion)
    return relaciones


@dataclass
class CoconoCanonico:
    """
    Inyecciones i_a: M_a -> H y, para cada flecha theta: a -> b, la familia
    x -> (i_a(x) -> i_b(F x)) de flechas insertadas con testigo identidad.
    """

    inyecciones: dict
    transformaciones: dict


def cocono_canonico(hocolim):
    """
    Cocono de H sobre el diagrama (varianza izquierda, dirección forward).

    Raises:
        ErrorEstructural: En las otras orientaciones las flechas insertadas no apuntan hacia H
    """
    diagrama = hocolim.diagrama
    if diagrama.varianza != "left" or hocolim.direccion != "forward":
        raise ErrorEstructural("el cocono canónico solo existe con varianza izquierda y dirección forward")
    D = diagrama.indice
    H = hocolim.base
    inyecciones = {}
    for alfa in D.objetos:
        M = diagrama.valores[alfa]
        inyecciones[alfa] = FuntorRelativo(
            M,
            hocolim.relativa,
            {x: nombre_de_objeto(alfa, x) for x in M.base.objetos},
            {f: hocolim.incluir(alfa, f) for f in M.base.morfismos},
        )
    transformaciones = {}
    for theta in D.morfismos:
        alfa, beta = D.origen(theta), D.destino(theta)
        F = diagrama.funtor(theta)
        componentes = {}
        for x in diagrama.valores[alfa].base.objetos:
            if D.es_identidad(theta):
                componentes[x] = H.identidad(nombre_de_objeto(alfa, x))
                continue
            clave = (theta, x, F.objeto(x), diagrama.valores[beta].base.identidad(F.objeto(x)))
            if clave in hocolim.insertados:
                componentes[x] = hocolim.morfismo(nombre_de_objeto(alfa, x), (hocolim.insertados[clave],))
            else:
                componentes[x] = hocolim.incluir(beta, hocolim.sustitutos[clave])
        transformaciones[theta] = componentes
    return CoconoCanonico(inyecciones, transformaciones)


def _punto():
    return CategoriaRelativa(desde_tablas(["pt"], {}, {}))


def _al_punto(M, punto):
    return FuntorRelativo(M, punto, {x: "pt" for x in M.base.objetos}, {f: "id_pt" for f in M.base.morfismos})


def _identidad_relativa(M):
    return FuntorRelativo(M, M, {x: x for x in M.base.objetos}, {f: f for f in M.base.morfismos})


def indice_pushout():
    """b <-f- a -g-> c."""
    return desde_tablas(["a", "b", "c"], {"f": ("a", "b"), "g": ("a", "c")}, {})


def indice_coigualador():
    """Dos flechas paralelas s, t: a -> b."""
    return desde_tablas(["a", "b"], {"s": ("a", "b"), "t": ("a", "b")}, {})


def diagrama_pushout(apice, izquierda, derecha, funtor_izquierdo, funtor_derecho, varianza="left"):
    """Diagrama izquierda <- apice -> derecha sobre indice_pushout."""
    D = indice_pushout()
    valores = {"a": apice, "b": izquierda, "c": derecha}
    funtores = {
        "f": funtor_izquierdo,
        "g": funtor_derecho,
        "id_a": _identidad_relativa(apice),
        "id_b": _identidad_relativa(izquierda),
        "id_c": _identidad_relativa(derecha),
    }
    return exigir_diagrama(DiagramaDeCategoriasRelativas(D, valores, funtores, varianza))


def diagrama_cofibra(funtor, varianza="left"):
    """Cofibra homotópica de F: M -> N, el pushout de * <- M -> N."""
    punto = _punto()
    return diagrama_pushout(funtor.origen, punto, funtor.destino, _al_punto(funtor.origen, punto), funtor, varianza)


def diagrama_coigualador(funtor_s, funtor_t, varianza="left"):
    """Coigualador homotópico de dos funtores paralelos M -> N."""
    D = indice_coigualador()
    M, N = funtor_s.origen, funtor_s.destino
    funtores = {"s": funtor_s, "t": funtor_t, "id_a": _identidad_relativa(M), "id_b": _identidad_relativa(N)}
    return exigir_diagrama(DiagramaDeCategoriasRelativas(D, {"a": M, "b": N}, funtores, varianza))

