"""
Verificación del teorema de comparación a escala de escritorio.

Para un diagrama de categorías relativas se compara, nivel a nivel, el hocolim
de Bousfield-Kan de los diagramas de clasificación con el diagrama de
clasificación de la categoría hocolim. El resultado es un reporte serializable
a JSON cuyas claves siempre salen en el mismo orden.
"""

import json
import logging
import time
from dataclasses import dataclass, field

from .categorias.relativas import potencia_de_funtor
from .clasificacion import (
    certificar_baut,
    diagrama_de_clasificacion,
    mapa_de_clasificacion,
    verificar_segal,
)
from .configuracion import Cotas
from .errores import ErrorEstructural
from .grothendieck import (
    construccion_de_grothendieck,
    funtor_de_comparacion,
    mapa_de_comparacion,
    mapa_de_thomason,
)
from .hocolim_categorias import categoria_hocolim, cocono_canonico, exigir_diagrama
from .homologia import certificado_de_equivalencia, homologia_hasta
from .simplicial.conjuntos import componentes_conexas
from .simplicial.hocolim import DiagramaSimplicial, hocolim_bisimplicial
from .simplicial.nervios import nervio

LOGGER = logging.getLogger(__name__)


@dataclass
class ReporteDeVerificacion:
    """Resultado de verificar_teorema; aprobado decide el código de salida."""

    aprobado: bool
    varianza: str
    direccion: str
    cotas: dict
    hocolim: dict
    niveles: list = field(default_factory=list)
    segal: list = field(default_factory=list)
    baut_hocolim: dict = field(default_factory=dict)
    notas: list = field(default_factory=list)
    segundos: float = 0.0

    def a_diccionario(self):
        return {
            "aprobado": self.aprobado,
            "varianza": self.varianza,
            "direccion": self.direccion,
            "cotas": self.cotas,
            "hocolim": self.hocolim,
            "niveles": self.niveles,
            "segal": self.segal,
            "baut_hocolim": self.baut_hocolim,
            "notas": self.notas,
            "segundos": round(self.segundos, 3),
        }

    def a_json(self):
        """a_diccionario serializado con sangría y sin escapar acentos."""
        return json.dumps(self.a_diccionario(), indent=2, ensure_ascii=False)


def _avisar(callback_progreso, etapa, detalle=""):
    LOGGER.info("%s %s", etapa, detalle)
    if callback_progreso:
        callback_progreso(etapa, detalle)


def _grupos(lista):
    return [grupo.a_diccionario() for grupo in lista]


def _nivel_con_mapa_canonico(n, diagrama, hocolim, cocono, clasificaciones, mapas, nivel_bk, clasificacion_H, cotas):
    D = diagrama.indice
    categorias = {alfa: clasificaciones[alfa].categorias[n] for alfa in D.objetos}
    funtores = {
        theta: potencia_de_funtor(
            diagrama.funtor(theta), categorias[D.origen(theta)], categorias[D.destino(theta)]
        )
        for theta in D.morfismos
    }
    grothendieck = construccion_de_grothendieck(D, categorias, funtores)
    nervio_G = nervio(grothendieck, cotas.n_interna, cotas.presupuesto_simplices)
    nervios = DiagramaSimplicial(
        D,
        {alfa: clasificaciones[alfa].niveles[n] for alfa in D.objetos},
        {theta: mapas[theta].nivel(n) for theta in D.morfismos},
    )
    thomason = mapa_de_thomason(nervios, nivel_bk, categorias, funtores, nervio_G)
    psi = funtor_de_comparacion(hocolim, cocono, grothendieck, categorias, clasificacion_H.categorias[n])
    comparacion = mapa_de_comparacion(thomason, nervio_G, clasificacion_H.niveles[n], psi)
    return certificado_de_equivalencia(comparacion, cotas.grado_homologia)


def verificar_teorema(diagrama, cotas=None, callback_progreso=None):
    """
    Verifica hocolim(L_C M) ≃ L_C(hocolim M) en los niveles 0..N_outer.

    Con varianza izquierda y dirección forward se certifica el mapa canónico
    (Thomason seguido del funtor inducido por el cocono). En dirección
    paper-literal no hay mapa canónico y se comparan invariantes. Un diagrama
    de varianza derecha se verifica sobre su opuesto.

    Args:
        diagrama (DiagramaDeCategoriasRelativas): Diagrama funtorial
        cotas (Cotas): Truncamientos y dirección de inserción
        callback_progreso (callable): Recibe (etapa, detalle) en cada paso

    Returns:
        ReporteDeVerificacion
    """
    inicio = time.perf_counter()
    cotas = (cotas or Cotas()).validar()
    exigir_diagrama(diagrama)
    notas = []
    varianza_original = diagrama.varianza
    if diagrama.varianza == "right":
        diagrama = diagrama.opuesto(varianza="left")
        notas.append("varianza derecha: se verifica el diagrama opuesto con varianza izquierda")
    D = diagrama.indice

    _avisar(callback_progreso, "hocolim", f"dirección {cotas.direccion_insercion}")
    hocolim = categoria_hocolim(
        diagrama,
        cotas.direccion_insercion,
        max_longitud_palabra=cotas.max_longitud_palabra,
        max_pasadas_completado=cotas.max_pasadas_completado,
    )

    _avisar(callback_progreso, "clasificacion", f"{len(D.objetos)} categorías del diagrama")
    clasificaciones = {
        alfa: diagrama_de_clasificacion(M, cotas.n_externa, cotas.n_interna, cotas.presupuesto_simplices)
        for alfa, M in diagrama.valores.items()
    }
    mapas = {
        theta: mapa_de_clasificacion(
            diagrama.funtor(theta), clasificaciones[D.origen(theta)], clasificaciones[D.destino(theta)]
        )
        for theta in D.morfismos
    }
    _avisar(callback_progreso, "hocolim_bisimplicial")
    lado_izquierdo = hocolim_bisimplicial(
        D,
        {alfa: L.espacio for alfa, L in clasificaciones.items()},
        mapas,
        cota_externa=cotas.n_externa,
        cota_interna=cotas.n_interna,
        presupuesto=cotas.presupuesto_simplices,
    )
    _avisar(callback_progreso, "clasificacion_hocolim")
    clasificacion_H = diagrama_de_clasificacion(
        hocolim.relativa, cotas.n_externa, cotas.n_interna, cotas.presupuesto_simplices
    )

    canonico = cotas.direccion_insercion == "forward"
    cocono = cocono_canonico(hocolim) if canonico else None
    if canonico:
        notas.append(
            "dirección forward: el mapa certificado va de hocolim L_C(M) a L_C(hocolim M), al revés del "
            "enunciado L_C(hocolim M) -> hocolim L_C(M); la certificación por homología no depende del sentido"
        )
    else:
        notas.append("dirección paper-literal: sin mapa canónico, se comparan pi_0 y homología")

    niveles = []
    for n in range(cotas.n_externa + 1):
        _avisar(callback_progreso, "nivel", str(n))
        izquierda = lado_izquierdo.niveles[n]
        derecha = clasificacion_H.niveles[n]
        homologia_izquierda = homologia_hasta(izquierda, cotas.grado_homologia)
        homologia_derecha = homologia_hasta(derecha, cotas.grado_homologia)
        entrada = {"nivel": n}
        if canonico:
            entrada["modo"] = "mapa_canonico"
            try:
                certificado = _nivel_con_mapa_canonico(
                    n, diagrama, hocolim, cocono, clasificaciones, mapas, izquierda, clasificacion_H, cotas
                )
                entrada["aprobado"] = certificado.aprobado
                entrada["certificado"] = certificado.a_diccionario()
            except ErrorEstructural as error:
                entrada["aprobado"] = False
                entrada["certificado"] = error.a_diccionario()
        else:
            entrada["modo"] = "invariantes_abstractos"
            componentes = [len(componentes_conexas(izquierda)), len(componentes_conexas(derecha))]
            entrada["aprobado"] = componentes[0] == componentes[1] and homologia_izquierda == homologia_derecha
            entrada["componentes"] = componentes
        entrada["homologia_hocolim"] = _grupos(homologia_izquierda)
        entrada["homologia_clasificacion"] = _grupos(homologia_derecha)
        niveles.append(entrada)

    segal = []
    for n in range(2, cotas.n_externa + 1):
        segal.append({"lado": "hocolim", **verificar_segal(lado_izquierdo, n).a_diccionario()})
        segal.append({"lado": "clasificacion", **verificar_segal(clasificacion_H, n).a_diccionario()})

    _avisar(callback_progreso, "baut")
    baut = certificar_baut(hocolim.relativa, cotas.grado_homologia, cotas.n_interna, cotas.presupuesto_simplices)
    notas.append("el chequeo BAut sobre H es diagnóstico y no decide el resultado")

    H = hocolim.base
    aprobado = all(nivel["aprobado"] for nivel in niveles) and all(s["es_isomorfismo"] for s in segal)
    reporte = ReporteDeVerificacion(
        aprobado=aprobado,
        varianza=varianza_original,
        direccion=cotas.direccion_insercion,
        cotas={
            "n_externa": cotas.n_externa,
            "n_interna": cotas.n_interna,
            "grado_homologia": cotas.grado_homologia,
            "presupuesto_simplices": cotas.presupuesto_simplices,
            "max_longitud_palabra": cotas.max_longitud_palabra,
            "max_pasadas_completado": cotas.max_pasadas_completado,
            "direccion_insercion": cotas.direccion_insercion,
        },
        hocolim={
            "objetos": len(H.objetos),
            "morfismos": len(H.morfismos),
            "marcados": len(hocolim.relativa.marcados),
            "insertados": len(hocolim.insertados),
        },
        niveles=niveles,
        segal=segal,
        baut_hocolim=baut.a_diccionario(),
        notas=notas,
        segundos=time.perf_counter() - inicio,
    )
    _avisar(callback_progreso, "fin", "aprobado" if aprobado else "fallido")
    return reporte
