"""
Interfaz de línea de comandos de relcat.

Subcomandos: validate, lcc, segal, baut, hocolim y verify. Con --json cada
subcomando imprime un objeto JSON (también los errores). El código de salida
es 0 si todo lo verificado pasa, 1 si algún certificado falla y 2 ante un
error de entrada o de cotas.
"""

import argparse
import json
import logging
import sys
from pathlib import Path

from logica.categorias.relativas import clases_de_equivalencia
from logica.clasificacion import certificar_baut, diagrama_de_clasificacion, verificar_segal
from logica.configuracion import DIRECCIONES_DE_INSERCION, Cotas, presupuesto_global
from logica.errores import ErrorRelcat
from logica.formatos import escribir_categoria_relativa, leer_categoria_relativa, leer_diagrama
from logica.hocolim_categorias import categoria_hocolim
from logica.simplicial.conjuntos import componentes_conexas
from logica.verificador import verificar_teorema

LOGGER = logging.getLogger(__name__)

SALIDA_OK = 0
SALIDA_FALLA = 1
SALIDA_ERROR = 2


def _imprimir(datos, como_json, texto):
    if como_json:
        print(json.dumps(datos, indent=2, ensure_ascii=False))
    else:
        print(texto)


def comando_validate(args):
    ruta = Path(args.archivo)
    if ruta.suffix == ".diagram":
        diagrama = leer_diagrama(ruta)
        datos = {
            "tipo": "diagrama",
            "objetos": len(diagrama.indice.objetos),
            "flechas": len(diagrama.indice.morfismos),
            "varianza": diagrama.varianza,
        }
        texto = f"diagrama válido: {datos['objetos']} objetos, {datos['flechas']} flechas, varianza {diagrama.varianza}"
    else:
        relativa = leer_categoria_relativa(ruta)
        C = relativa.base
        datos = {
            "tipo": "categoria_relativa",
            "objetos": len(C.objetos),
            "morfismos": len(C.morfismos),
            "marcados": len(relativa.marcados),
            "clases": len(clases_de_equivalencia(relativa)),
        }
        texto = (f"categoría relativa válida: {datos['objetos']} objetos, {datos['morfismos']} morfismos, "
                 f"{datos['marcados']} marcados, {datos['clases']} clases")
    _imprimir(datos, args.json, texto)
    return SALIDA_OK


def comando_lcc(args):
    relativa = leer_categoria_relativa(args.archivo)
    L = diagrama_de_clasificacion(relativa, args.n, args.m, presupuesto_global())
    niveles = []
    for n, W in enumerate(L.niveles):
        niveles.append({
            "nivel": n,
            "simplices": W.conteos(),
            "no_degenerados": [len(W.no_degenerados(k)) for k in range(W.cota + 1)],
            "componentes": len(componentes_conexas(W)) if W.cota >= 1 else len(W.simplices[0]),
        })
    datos = {"n_externa": args.n, "n_interna": args.m, "niveles": niveles}
    if args.emit:
        # el archivo lleva además los símplices no degenerados de cada nivel, como listas anidadas
        completo = {
            **datos,
            "niveles": [
                {**d, "simplices_no_degenerados": [list(W.no_degenerados(k)) for k in range(W.cota + 1)]}
                for d, W in zip(niveles, L.niveles)
            ],
        }
        Path(args.emit).write_text(json.dumps(completo, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")
    texto = "\n".join(f"nivel {d['nivel']}: símplices {d['simplices']}, componentes {d['componentes']}" for d in niveles)
    _imprimir(datos, args.json, texto)
    return SALIDA_OK


def comando_segal(args):
    relativa = leer_categoria_relativa(args.archivo)
    L = diagrama_de_clasificacion(relativa, args.n, args.m, presupuesto_global())
    resultados = [verificar_segal(L, n) for n in range(2, args.n + 1)]
    datos = {"resultados": [r.a_diccionario() for r in resultados]}
    texto = "\n".join(
        f"nivel {r.nivel}: {'isomorfismo' if r.es_isomorfismo else 'falla: ' + r.contraejemplo}" for r in resultados
    )
    _imprimir(datos, args.json, texto)
    return SALIDA_OK if all(r.es_isomorfismo for r in resultados) else SALIDA_FALLA


def comando_baut(args):
    cotas = Cotas(n_interna=args.m, grado_homologia=args.hdeg).validar()
    relativa = leer_categoria_relativa(args.archivo)
    reporte = certificar_baut(relativa, cotas.grado_homologia, cotas.n_interna, cotas.presupuesto_simplices)
    texto = "\n".join(
        f"nivel {nivel['nivel']}: {'pasa' if nivel['aprobado'] else 'falla'} (componentes {nivel['componentes']})"
        for nivel in reporte.niveles
    )
    _imprimir(reporte.a_diccionario(), args.json, texto)
    return SALIDA_OK if reporte.aprobado else SALIDA_FALLA


def comando_hocolim(args):
    diagrama = leer_diagrama(args.archivo)
    hocolim = categoria_hocolim(
        diagrama,
        args.insert_direction,
        max_longitud_palabra=args.max_word_length,
        max_pasadas_completado=args.max_completion_passes,
    )
    H = hocolim.base
    if args.emit:
        Path(args.emit).write_text(escribir_categoria_relativa(hocolim.relativa), encoding="utf-8")
    datos = {
        "objetos": len(H.objetos),
        "morfismos": len(H.morfismos),
        "marcados": len(hocolim.relativa.marcados),
        "insertados": len(hocolim.insertados),
        "reglas": len(hocolim.presentacion.sistema),
    }
    texto = (f"hocolim: {datos['objetos']} objetos, {datos['morfismos']} morfismos, "
             f"{datos['insertados']} flechas insertadas")
    _imprimir(datos, args.json, texto)
    return SALIDA_OK


def comando_verify(args):
    cotas = Cotas(
        n_externa=args.n,
        n_interna=args.m,
        grado_homologia=args.hdeg,
        max_longitud_palabra=args.max_word_length,
        max_pasadas_completado=args.max_completion_passes,
        direccion_insercion=args.insert_direction,
    ).validar()
    diagrama = leer_diagrama(args.archivo)
    reporte = verificar_teorema(diagrama, cotas, callback_progreso=lambda etapa, detalle: LOGGER.debug("%s %s", etapa, detalle))
    texto = "\n".join(
        [f"nivel {nivel['nivel']} ({nivel['modo']}): {'pasa' if nivel['aprobado'] else 'falla'}" for nivel in reporte.niveles]
        + [f"segal {s['lado']} nivel {s['nivel']}: {'pasa' if s['es_isomorfismo'] else 'falla'}" for s in reporte.segal]
        + [f"resultado: {'aprobado' if reporte.aprobado else 'fallido'}"]
    )
    if args.json:
        print(reporte.a_json())
    else:
        print(texto)
    return SALIDA_OK if reporte.aprobado else SALIDA_FALLA


def construir_parser():
    comunes = argparse.ArgumentParser(add_help=False)
    comunes.add_argument("--json", action="store_true", help="imprimir la salida como JSON")
    comunes.add_argument("--verbose", action="store_true", help="mostrar el progreso en el log")
    parser = argparse.ArgumentParser(prog="relcat", description="Colímites homotópicos de categorías relativas")
    subparsers = parser.add_subparsers(dest="comando", required=True)

    validate = subparsers.add_parser("validate", parents=[comunes], help="validar un .relcat o .diagram")
    validate.add_argument("archivo")
    validate.set_defaults(funcion=comando_validate)

    lcc = subparsers.add_parser("lcc", parents=[comunes], help="construir el diagrama de clasificación")
    lcc.add_argument("archivo")
    lcc.add_argument("--n", type=int, default=2, help="último nivel externo")
    lcc.add_argument("--m", type=int, default=4, help="grado máximo de cada nervio")
    lcc.add_argument("--emit", help="escribir en este archivo el resumen JSON con los símplices no degenerados de cada nivel")
    lcc.set_defaults(funcion=comando_lcc)

    segal = subparsers.add_parser("segal", parents=[comunes], help="verificar la condición de Segal")
    segal.add_argument("archivo")
    segal.add_argument("--n", type=int, default=2)
    segal.add_argument("--m", type=int, default=2)
    segal.set_defaults(funcion=comando_segal)

    baut = subparsers.add_parser("baut", parents=[comunes], help="comparar L_C con el modelo BAut")
    baut.add_argument("archivo")
    baut.add_argument("--hdeg", type=int, default=3)
    baut.add_argument("--m", type=int, default=4)
    baut.set_defaults(funcion=comando_baut)

    for nombre, funcion, ayuda in (
        ("hocolim", comando_hocolim, "construir la categoría hocolim de un diagrama"),
        ("verify", comando_verify, "verificar el teorema de comparación"),
    ):
        sub = subparsers.add_parser(nombre, parents=[comunes], help=ayuda)
        sub.add_argument("archivo")
        sub.add_argument("--insert-direction", choices=DIRECCIONES_DE_INSERCION, default="forward")
        sub.add_argument("--max-word-length", type=int, default=8)
        sub.add_argument("--max-completion-passes", type=int, default=20)
        if nombre == "hocolim":
            sub.add_argument("--emit", help="escribir H como .relcat en este archivo")
        else:
            sub.add_argument("--n", type=int, default=2)
            sub.add_argument("--m", type=int, default=4)
            sub.add_argument("--hdeg", type=int, default=3)
        sub.set_defaults(funcion=funcion)
    return parser


def main(argv=None):
    """
    Punto de entrada de la consola.

    Returns:
        int: Código de salida
    """
    args = construir_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(asctime)s %(name)s %(message)s",
    )
    try:
        return args.funcion(args)
    except ErrorRelcat as error:
        LOGGER.debug("error en %s", args.comando, exc_info=True)
        if args.json:
            print(json.dumps(error.a_diccionario(), indent=2, ensure_ascii=False))
        else:
            print(f"error: {error}", file=sys.stderr)
        return SALIDA_ERROR


if __name__ == "__main__":
    sys.exit(main())
