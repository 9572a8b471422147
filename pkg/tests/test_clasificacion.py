import pytest

from logica.categorias.relativas import FuntorRelativo, componer_funtores
from logica.clasificacion import (
    certificar_baut,
    diagrama_de_clasificacion,
    mapa_de_clasificacion,
    modelo_baut,
    verificar_segal,
)
from logica.errores import ErrorDeCotas
from logica.homologia import GrupoDeHomologia, homologia_hasta
from logica.simplicial.bisimplicial import (
    ConjuntoBisimplicialTruncado,
    auditar_identidades_externas,
    componer_mapas_bisimpliciales,
    validar_naturalidad,
)
from logica.simplicial.conjuntos import auditar_identidades, componentes_conexas, validar_mapa
from conftest import CATEGORIAS_DEL_CORPUS


def colapso(origen, destino):
    """Envía toda la flecha marcada al punto."""
    return FuntorRelativo(
        origen, destino, {"x": "pt", "y": "pt"}, {"w": "id_pt", "id_x": "id_pt", "id_y": "id_pt"}
    )


def test_niveles_de_la_flecha_no_marcada(cargar):
    # solo las identidades están marcadas: cada nivel es discreto
    L = diagrama_de_clasificacion(cargar("flecha_no_marcada"), n_externa=3, n_interna=2)
    for n, W in enumerate(L.niveles):
        assert W.conteos() == [n + 2] * 3


def test_nivel_cero_es_el_nervio_de_we(cargar):
    L = diagrama_de_clasificacion(cargar("flecha_marcada"), n_externa=1, n_interna=3)
    assert L.niveles[0].conteos() == [2, 3, 4, 5]


@pytest.mark.parametrize("nombre", ["flecha_marcada", "zmod2", "idempotente", "pushout_apex", "vacia"])
def test_identidades_externas(cargar, nombre):
    L = diagrama_de_clasificacion(cargar(nombre), n_externa=2, n_interna=2)
    assert auditar_identidades_externas(L.espacio) == []
    for W in L.niveles:
        assert auditar_identidades(W) == []
    for caras in L.espacio.caras_externas:
        for cara in caras:
            assert validar_mapa(cara) == []


@pytest.mark.parametrize("nombre", CATEGORIAS_DEL_CORPUS)
def test_segal_en_el_corpus(cargar, nombre):
    L = diagrama_de_clasificacion(cargar(nombre), n_externa=3, n_interna=2)
    for n in (1, 2, 3):
        resultado = verificar_segal(L, n)
        assert resultado.es_isomorfismo, resultado.contraejemplo


def test_segal_en_nivel_tres_sobre_el_espacio(cargar):
    L = diagrama_de_clasificacion(cargar("zmod2"), n_externa=3, n_interna=2)
    assert verificar_segal(L.espacio, 3).es_isomorfismo


def test_segal_detecta_caras_corruptas(cargar):
    L = diagrama_de_clasificacion(cargar("flecha_marcada"), n_externa=2, n_interna=2)
    W = L.espacio
    caras = [list(c) for c in W.caras_externas]
    caras[1][0] = caras[1][1]
    corrupto = ConjuntoBisimplicialTruncado(W.niveles, caras, W.degeneraciones_externas)
    resultado = verificar_segal(corrupto, 2)
    assert not resultado.es_isomorfismo
    assert resultado.contraejemplo
    assert resultado.a_diccionario()["es_isomorfismo"] is False
    assert auditar_identidades_externas(corrupto)


def test_segal_fuera_de_rango(cargar):
    L = diagrama_de_clasificacion(cargar("terminal"), n_externa=2, n_interna=2)
    with pytest.raises(ErrorDeCotas):
        verificar_segal(L, 3)
    with pytest.raises(ErrorDeCotas):
        verificar_segal(L, 0)


def test_mapa_de_clasificacion_es_natural(cargar):
    M, P = cargar("flecha_marcada"), cargar("terminal")
    L_M = diagrama_de_clasificacion(M, n_externa=2, n_interna=2)
    L_P = diagrama_de_clasificacion(P, n_externa=2, n_interna=2)
    mapa = mapa_de_clasificacion(colapso(M, P), L_M, L_P)
    assert validar_naturalidad(mapa) == []
    for nivel in mapa.niveles:
        assert validar_mapa(nivel) == []


def test_mapa_de_clasificacion_respeta_composicion(cargar):
    N, M, P = cargar("flecha_no_marcada"), cargar("flecha_marcada"), cargar("terminal")
    F = FuntorRelativo(N, M, {"0": "x", "1": "y"}, {"f": "w", "id_0": "id_x", "id_1": "id_y"})
    G = colapso(M, P)
    L_N, L_M, L_P = (diagrama_de_clasificacion(R, n_externa=1, n_interna=2) for R in (N, M, P))
    compuesto = mapa_de_clasificacion(componer_funtores(G, F), L_N, L_P)
    por_partes = componer_mapas_bisimpliciales(mapa_de_clasificacion(G, L_M, L_P), mapa_de_clasificacion(F, L_N, L_M))
    for a, b in zip(compuesto.niveles, por_partes.niveles):
        assert a.componentes == b.componentes


def test_modelo_baut_de_zmod2(cargar):
    modelo = modelo_baut(cargar("zmod2"), 0, 3)
    assert homologia_hasta(modelo, 2) == [GrupoDeHomologia(1), GrupoDeHomologia(0, (2,)), GrupoDeHomologia(0)]


def test_modelo_baut_cuenta_clases(cargar):
    modelo = modelo_baut(cargar("cofibra_destino"), 0, 2)
    assert len(componentes_conexas(modelo)) == 2
    with pytest.raises(ErrorDeCotas):
        modelo_baut(cargar("terminal"), 2, 2)


@pytest.mark.parametrize("nombre", CATEGORIAS_DEL_CORPUS)
def test_certificado_baut(cargar, nombre):
    reporte = certificar_baut(cargar(nombre), K=3, n_interna=4)
    assert reporte.aprobado, reporte.a_diccionario()
    assert [nivel["nivel"] for nivel in reporte.niveles] == [0, 1]


def test_torsion_de_zmod2_en_ambos_lados(cargar):
    reporte = certificar_baut(cargar("zmod2"), K=3, n_interna=4)
    z2 = {"rank": 0, "torsion": [2]}
    for nivel in reporte.niveles:
        for lado in ("homologia_lc", "homologia_modelo"):
            assert nivel[lado][1] == z2
            assert nivel[lado][3] == z2
