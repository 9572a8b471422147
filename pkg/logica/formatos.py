"""
Lectura y escritura de los formatos de texto .relcat y .diagram.

Formato .relcat (los comentarios empiezan con #):

    [objects]
    x
    y
    [morphisms]
    w : x -> y
    [compose]
    g . f = h
    [weq]
    w

Las identidades son implícitas y se llaman id_<objeto>. Toda pareja
componible de morfismos que no son identidad debe aparecer en [compose].

Formato .diagram:

    [index] indice.relcat
    [object a] m.relcat
    [arrow f : a -> b]
    obj x |-> y
    mor g |-> h
    variance = left

Las rutas se resuelven respecto del archivo .diagram.
"""

import logging
import re
from pathlib import Path

from .categorias.categoria_finita import desde_tablas, nombre_identidad, validar_categoria
from .categorias.relativas import CategoriaRelativa, FuntorRelativo, componer_funtores, validar_marcado
from .configuracion import VARIANZAS
from .errores import ErrorDeLectura, ErrorDeValidacion
from .hocolim_categorias import DiagramaDeCategoriasRelativas, exigir_diagrama

LOGGER = logging.getLogger(__name__)

SECCIONES = ("objects", "morphisms", "compose", "weq")
PATRON_SECCION = re.compile(r"^\[(\w+)\]$")
PATRON_MORFISMO = re.compile(r"^(\S+)\s*:\s*(\S+)\s*->\s*(\S+)$")
PATRON_COMPOSICION = re.compile(r"^(\S+)\s+\.\s+(\S+)\s*=\s*(\S+)$")
PATRON_INDICE = re.compile(r"^\[index\]\s+(\S+)$")
PATRON_OBJETO = re.compile(r"^\[object\s+(\S+)\]\s+(\S+)$")
PATRON_FLECHA = re.compile(r"^\[arrow\s+(\S+)\s*:\s*(\S+)\s*->\s*(\S+)\]$")
PATRON_ASIGNACION = re.compile(r"^(obj|mor)\s+(\S+)\s*\|->\s*(\S+)$")
PATRON_VARIANZA = re.compile(r"^variance\s*=\s*(\S+)$")


def _lineas(texto):
    """Pares (número de línea, contenido sin comentario ni espacios de borde)."""
    for numero, linea in enumerate(texto.splitlines(), start=1):
        contenido = linea.split("#", 1)[0].strip()
        if contenido:
            yield numero, contenido, linea


def _columna(linea, token):
    posicion = linea.find(token)
    return posicion + 1 if posicion >= 0 else 1


def interpretar_categoria_relativa(texto, ruta=None):
    """
    Convierte el texto de un .relcat en una CategoriaRelativa validada.

    Args:
        texto (str): Contenido del archivo
        ruta (str): Solo para los mensajes de error

    Returns:
        CategoriaRelativa

    Raises:
        ErrorDeLectura: Sintaxis inválida o nombres desconocidos, con línea y columna
        ErrorDeValidacion: Composición incompleta, axiomas violados o marcado no cerrado
    """
    seccion = None
    objetos = []
    flechas = {}
    composiciones = {}
    marcados = []

    def fallar(mensaje, numero, linea, token=None):
        raise ErrorDeLectura(mensaje, ruta, numero, _columna(linea, token) if token else 1)

    for numero, contenido, linea in _lineas(texto):
        encabezado = PATRON_SECCION.match(contenido)
        if encabezado:
            seccion = encabezado.group(1)
            if seccion not in SECCIONES:
                fallar(f"sección desconocida [{seccion}]", numero, linea, seccion)
            continue
        if seccion is None:
            fallar("contenido fuera de una sección", numero, linea)

        if seccion == "objects":
            for nombre in contenido.split():
                if nombre in objetos:
                    fallar(f"objeto repetido {nombre}", numero, linea, nombre)
                objetos.append(nombre)
        elif seccion == "morphisms":
            encontrado = PATRON_MORFISMO.match(contenido)
            if not encontrado:
                fallar("se esperaba 'nombre : origen -> destino'", numero, linea)
            nombre, origen, destino = encontrado.groups()
            if nombre in flechas or nombre in {nombre_identidad(x) for x in objetos}:
                fallar(f"morfismo repetido o con nombre de identidad: {nombre}", numero, linea, nombre)
            for extremo in (origen, destino):
                if extremo not in objetos:
                    fallar(f"objeto desconocido {extremo}", numero, linea, extremo)
            flechas[nombre] = (origen, destino)
        elif seccion == "compose":
            encontrado = PATRON_COMPOSICION.match(contenido)
            if not encontrado:
                fallar("se esperaba 'g . f = h'", numero, linea)
            g, f, h = encontrado.groups()
            conocidos = set(flechas) | {nombre_identidad(x) for x in objetos}
            for nombre in (g, f, h):
                if nombre not in conocidos:
                    fallar(f"morfismo desconocido {nombre}", numero, linea, nombre)
            if (g, f) in composiciones and composiciones[(g, f)] != h:
                fallar(f"composición {g} . {f} definida dos veces", numero, linea, g)
            composiciones[(g, f)] = h
        else:
            for nombre in contenido.split():
                if nombre not in flechas and nombre not in {nombre_identidad(x) for x in objetos}:
                    fallar(f"morfismo marcado desconocido {nombre}", numero, linea, nombre)
                marcados.append(nombre)

    categoria = desde_tablas(objetos, flechas, {})
    faltantes = []
    for g, f in categoria.pares_componibles():
        if categoria.es_identidad(f) or categoria.es_identidad(g):
            continue
        if (g, f) not in composiciones:
            faltantes.append(f"falta la composición {g} . {f}")
    if faltantes:
        raise ErrorDeValidacion(f"{ruta or '<texto>'}: tabla de composición incompleta", faltantes)
    categoria = desde_tablas(objetos, flechas, composiciones)
    reporte = validar_categoria(categoria)
    if not reporte.es_valida:
        raise ErrorDeValidacion(f"{ruta or '<texto>'}: no es una categoría", reporte.violaciones)
    relativa = CategoriaRelativa(categoria, marcados)
    violaciones = validar_marcado(relativa)
    if violaciones:
        raise ErrorDeValidacion(f"{ruta or '<texto>'}: el marcado no es cerrado bajo composición", violaciones)
    LOGGER.debug("leída %s: %r", ruta, relativa)
    return relativa


def _leer_texto(ruta):
    """
    Contenido UTF-8 del archivo.

    Raises:
        ErrorDeLectura: Si el archivo no existe, no se puede abrir o no es UTF-8
    """
    ruta = Path(ruta)
    try:
        return ruta.read_text(encoding="utf-8")
    except UnicodeDecodeError as error:
        linea = error.object[: error.start].count(b"\n") + 1
        columna = error.start - (error.object.rfind(b"\n", 0, error.start) + 1) + 1
        raise ErrorDeLectura(
            f"el archivo no es UTF-8 válido (byte {error.start})", str(ruta), linea, columna
        ) from error
    except OSError as error:
        raise ErrorDeLectura(f"no se puede leer el archivo: {error.strerror or error}", str(ruta), 1, 1) from error


def leer_categoria_relativa(ruta):
    return interpretar_categoria_relativa(_leer_texto(ruta), str(ruta))


def escribir_categoria_relativa(relativa):
    """
    Texto .relcat de una categoría relativa con identificadores sin espacios.

    Returns:
        str
    """
    C = relativa.base
    lineas = ["[objects]"]
    lineas += [str(x) for x in C.objetos]
    lineas.append("[morphisms]")
    for f in C.morfismos_no_identidad():
        lineas.append(f"{f} : {C.origen(f)} -> {C.destino(f)}")
    lineas.append("[compose]")
    for g, f in C.pares_componibles():
        if not C.es_identidad(f) and not C.es_identidad(g):
            lineas.append(f"{g} . {f} = {C.componer(g, f)}")
    lineas.append("[weq]")
    lineas += [f for f in relativa.marcados_ordenados() if not C.es_identidad(f)]
    return "\n".join(lineas) + "\n"


def interpretar_diagrama(texto, ruta=None, cargar=leer_categoria_relativa):
    """
    Convierte un .diagram en un DiagramaDeCategoriasRelativas.

    Args:
        texto (str): Contenido del archivo
        ruta (str): Ruta del archivo; las rutas internas se resuelven respecto de ella
        cargar (callable): Lector de .relcat a usar para cada ruta

    Returns:
        DiagramaDeCategoriasRelativas
    """
    base = Path(ruta).parent if ruta else Path(".")
    indice = None
    valores = {}
    asignaciones = {}
    varianza = "left"
    actual = None
    flechas_declaradas = {}

    def fallar(mensaje, numero, linea, token=None):
        raise ErrorDeLectura(mensaje, ruta, numero, _columna(linea, token) if token else 1)

    for numero, contenido, linea in _lineas(texto):
        encontrado = PATRON_INDICE.match(contenido)
        if encontrado:
            indice = cargar(base / encontrado.group(1)).base
            actual = None
            continue
        encontrado = PATRON_OBJETO.match(contenido)
        if encontrado:
            alfa, archivo = encontrado.groups()
            if indice is None or alfa not in indice.objetos:
                fallar(f"objeto del índice desconocido {alfa}", numero, linea, alfa)
            valores[alfa] = cargar(base / archivo)
            actual = None
            continue
        encontrado = PATRON_FLECHA.match(contenido)
        if encontrado:
            theta, alfa, beta = encontrado.groups()
            if indice is None or theta not in indice.morfismos or indice.morfismos[theta] != (alfa, beta):
                fallar(f"flecha del índice desconocida {theta} : {alfa} -> {beta}", numero, linea, theta)
            actual = theta
            flechas_declaradas[theta] = numero
            asignaciones[theta] = ({}, {})
            continue
        encontrado = PATRON_VARIANZA.match(contenido)
        if encontrado:
            varianza = encontrado.group(1)
            if varianza not in VARIANZAS:
                fallar(f"varianza desconocida {varianza}", numero, linea, varianza)
            continue
        encontrado = PATRON_ASIGNACION.match(contenido)
        if encontrado and actual is not None:
            tipo, origen, destino = encontrado.groups()
            asignaciones[actual][0 if tipo == "obj" else 1][origen] = destino
            continue
        fallar("línea no reconocida", numero, linea)

    if indice is None:
        raise ErrorDeLectura("falta la línea [index]", ruta, 1, 1)
    for alfa in indice.objetos:
        if alfa not in valores:
            raise ErrorDeLectura(f"falta la categoría del objeto {alfa}", ruta, 1, 1)

    funtores = {}
    for theta, (objetos, morfismos) in asignaciones.items():
        alfa, beta = indice.morfismos[theta]
        M, N = valores[alfa], valores[beta]
        for x in M.base.objetos:
            if x not in objetos:
                raise ErrorDeLectura(f"la flecha {theta} no asigna el objeto {x}", ruta, flechas_declaradas[theta], 1)
        mapa_morfismos = {}
        for f in M.base.morfismos:
            if M.base.es_identidad(f):
                mapa_morfismos[f] = N.base.identidades.get(objetos[M.base.origen(f)])
            elif f in morfismos:
                mapa_morfismos[f] = morfismos[f]
            else:
                raise ErrorDeLectura(f"la flecha {theta} no asigna el morfismo {f}", ruta, flechas_declaradas[theta], 1)
        funtores[theta] = FuntorRelativo(M, N, dict(objetos), mapa_morfismos)
    for alfa in indice.objetos:
        M = valores[alfa]
        funtores[indice.identidad(alfa)] = FuntorRelativo(
            M, M, {x: x for x in M.base.objetos}, {f: f for f in M.base.morfismos}
        )
    # las flechas compuestas sin bloque propio se obtienen componiendo
    cambio = True
    while cambio:
        cambio = False
        for psi, theta in indice.pares_componibles():
            compuesta = indice.componer(psi, theta)
            if compuesta not in funtores and psi in funtores and theta in funtores:
                funtores[compuesta] = componer_funtores(funtores[psi], funtores[theta])
                cambio = True
    faltantes = [theta for theta in indice.morfismos if theta not in funtores]
    if faltantes:
        raise ErrorDeLectura(f"faltan los funtores de las flechas {faltantes}", ruta, 1, 1)
    return exigir_diagrama(DiagramaDeCategoriasRelativas(indice, valores, funtores, varianza))


def leer_diagrama(ruta):
    return interpretar_diagrama(_leer_texto(ruta), str(ruta))


def escribir_diagrama(diagrama, ruta_indice, rutas_objetos):
    """
    Texto .diagram; las categorías se referencian por las rutas dadas.

    Args:
        diagrama (DiagramaDeCategoriasRelativas): Diagrama a escribir
        ruta_indice (str): Ruta del .relcat del índice
        rutas_objetos (dict): objeto del índice -> ruta de su .relcat
    """
    D = diagrama.indice
    lineas = [f"[index] {ruta_indice}"]
    lineas += [f"[object {alfa}] {rutas_objetos[alfa]}" for alfa in D.objetos]
    for theta in D.morfismos_no_identidad():
        F = diagrama.funtor(theta)
        lineas.append(f"[arrow {theta} : {D.origen(theta)} -> {D.destino(theta)}]")
        lineas += [f"obj {x} |-> {y}" for x, y in sorted(F.mapa_objetos.items())]
        lineas += [
            f"mor {f} |-> {g}" for f, g in sorted(F.mapa_morfismos.items()) if not F.origen.base.es_identidad(f)
        ]
    lineas.append(f"variance = {diagrama.varianza}")
    return "\n".join(lineas) + "\n"
