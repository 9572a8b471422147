import pytest

from logica.categorias.categoria_finita import categoria_discreta, categoria_terminal
from logica.categorias.relativas import automorfismos_homotopicos
from logica.errores import ErrorDeCotas, PresupuestoExcedido
from logica.simplicial.conjuntos import (
    MapaSimplicial,
    auditar_identidades,
    componentes_conexas,
    componer_mapas,
    mapa_identidad,
    producto_fibrado,
    union_disjunta,
    validar_mapa,
)
from logica.simplicial.hocolim import DiagramaSimplicial, hocolim_bousfield_kan, mapa_a_cocono
from logica.simplicial.nervios import complejo_clasificante, mapa_de_nervios, nervio


def al_punto(X, punto):
    componentes = []
    for k, grado in enumerate(X.simplices):
        componentes.append({s: punto.simplices[k][0] for s in grado})
    return MapaSimplicial(X, punto, componentes)


def test_nervio_de_la_flecha(cargar):
    X = nervio(cargar("flecha_no_marcada").base, 4)
    assert X.conteos() == [2, 3, 4, 5, 6]
    assert [len(X.no_degenerados(k)) for k in range(5)] == [2, 1, 0, 0, 0]
    assert X.cara(1, 0, ("f",)) == ("1",)
    assert X.cara(1, 1, ("f",)) == ("0",)
    assert X.degeneracion(0, 0, ("0",)) == ("id_0",)


@pytest.mark.parametrize("nombre", ["zmod2", "pushout_apex", "cofibra_destino", "idempotente", "coigualador"])
def test_identidades_simpliciales_del_nervio(cargar, nombre):
    X = nervio(cargar(nombre).base, 4)
    assert auditar_identidades(X) == []


def test_degenerados_son_los_que_contienen_identidades(cargar):
    C = cargar("zmod2").base
    X = nervio(C, 3)
    for k in range(1, 4):
        for s in X.simplices[k]:
            assert X.es_degenerado(k, s) == any(C.es_identidad(f) for f in s)


def test_complejo_clasificante_de_zmod2(cargar):
    B = complejo_clasificante(automorfismos_homotopicos(cargar("zmod2"), "o"), 3)
    assert B.conteos() == [1, 2, 4, 8]
    assert [len(B.no_degenerados(k)) for k in range(4)] == [1, 1, 1, 1]


def test_union_disjunta_y_componentes(cargar):
    X = nervio(cargar("flecha_marcada").base, 2)
    Y = nervio(cargar("discreta2").base, 2)
    U = union_disjunta([X, Y])
    assert U.conteos() == [a + b for a, b in zip(X.conteos(), Y.conteos())]
    assert len(componentes_conexas(U)) == 3
    assert auditar_identidades(U) == []


def test_union_disjunta_exige_cotas_iguales(cargar):
    X = nervio(cargar("terminal").base, 2)
    Y = nervio(cargar("terminal").base, 3)
    with pytest.raises(ErrorDeCotas):
        union_disjunta([X, Y])
    assert union_disjunta([], cota=2).conteos() == [0, 0, 0]


def test_producto_fibrado_sobre_el_punto():
    punto = nervio(categoria_terminal(), 2)
    X = nervio(categoria_discreta(["a", "b"]), 2)
    P = producto_fibrado(al_punto(X, punto), al_punto(X, punto))
    assert P.conteos() == [4, 4, 4]
    assert len(componentes_conexas(P)) == 4
    assert auditar_identidades(P) == []


def test_validar_mapa_detecta_fallas(cargar):
    X = nervio(cargar("flecha_no_marcada").base, 2)
    assert validar_mapa(mapa_identidad(X)) == []
    componentes = [dict(c) for c in mapa_identidad(X).componentes]
    componentes[0][("0",)] = ("1",)
    assert validar_mapa(MapaSimplicial(X, X, componentes))


def test_pi0_necesita_aristas(cargar):
    X = nervio(cargar("terminal").base, 0)
    with pytest.raises(ErrorDeCotas):
        componentes_conexas(X)


def test_presupuesto_del_nervio(cargar):
    with pytest.raises(PresupuestoExcedido):
        nervio(cargar("zmod2").base, 6, presupuesto=20)


def test_hocolim_sobre_indice_terminal(cargar):
    X = nervio(cargar("flecha_marcada").base, 3)
    indice = categoria_terminal("pt")
    diagrama = DiagramaSimplicial(indice, {"pt": X}, {"id_pt": mapa_identidad(X)})
    H = hocolim_bousfield_kan(diagrama)
    assert H.conteos() == X.conteos()
    assert auditar_identidades(H) == []
    canonico = mapa_a_cocono(H, diagrama, {"pt": mapa_identidad(X)}, X)
    assert validar_mapa(canonico) == []


def test_hocolim_de_un_pushout_de_puntos(cargar):
    indice = cargar("pushout_apex").base
    punto = nervio(categoria_terminal(), 3)
    identidad = mapa_identidad(punto)
    diagrama = DiagramaSimplicial(
        indice,
        {alfa: punto for alfa in indice.objetos},
        {theta: identidad for theta in indice.morfismos},
    )
    H = hocolim_bousfield_kan(diagrama)
    # es el nervio del índice
    assert H.conteos() == nervio(indice, 3).conteos()
    assert len(componentes_conexas(H)) == 1
    assert auditar_identidades(H) == []


def test_mapa_de_nervios_es_simplicial(cargar):
    fuente = cargar("flecha_marcada").base
    destino = cargar("flecha_no_marcada").base
    X, Y = nervio(fuente, 3), nervio(destino, 3)
    mapa = mapa_de_nervios(X, Y, {"x": "0", "y": "1"}, {"w": "f", "id_x": "id_0", "id_y": "id_1"})
    assert validar_mapa(mapa) == []


def test_nervio_es_funtorial(cargar):
    marcada = cargar("flecha_marcada").base
    flecha = cargar("flecha_no_marcada").base
    apex = cargar("pushout_apex").base
    X, Y, Z = nervio(marcada, 3), nervio(flecha, 3), nervio(apex, 3)
    F = ({"x": "0", "y": "1"}, {"w": "f", "id_x": "id_0", "id_y": "id_1"})
    G = ({"0": "a", "1": "b"}, {"f": "f", "id_0": "id_a", "id_1": "id_b"})
    GF = ({x: G[0][y] for x, y in F[0].items()}, {f: G[1][g] for f, g in F[1].items()})
    compuesto = componer_mapas(mapa_de_nervios(Y, Z, *G), mapa_de_nervios(X, Y, *F))
    directo = mapa_de_nervios(X, Z, *GF)
    assert compuesto.componentes == directo.componentes
    assert validar_mapa(directo) == []


def test_producto_fibrado_sobre_si_mismo(cargar):
    X = nervio(cargar("coigualador").base, 3)
    P = producto_fibrado(mapa_identidad(X), mapa_identidad(X))
    assert P.conteos() == X.conteos()
    for k in range(4):
        assert P.simplices[k] == tuple((s, s) for s in X.simplices[k])
    assert auditar_identidades(P) == []


def test_propiedad_universal_del_producto_fibrado():
    punto = nervio(categoria_terminal(), 2)
    X = nervio(categoria_discreta(["a", "b"]), 2)
    Y = nervio(categoria_discreta(["c"]), 2)
    f, g = al_punto(X, punto), al_punto(Y, punto)
    P = producto_fibrado(f, g)
    primera = MapaSimplicial(P, X, [{s: s[0] for s in grado} for grado in P.simplices])
    segunda = MapaSimplicial(P, Y, [{s: s[1] for s in grado} for grado in P.simplices])
    assert validar_mapa(primera) == [] and validar_mapa(segunda) == []
    assert componer_mapas(f, primera).componentes == componer_mapas(g, segunda).componentes
    # el cono (X, id, X -> Y) factoriza por P y las proyecciones lo recuperan
    a, b = mapa_identidad(X), al_punto(X, Y)
    inducido = MapaSimplicial(X, P, [{s: (a(k, s), b(k, s)) for s in grado} for k, grado in enumerate(X.simplices)])
    assert validar_mapa(inducido) == []
    assert componer_mapas(primera, inducido).componentes == a.componentes
    assert componer_mapas(segunda, inducido).componentes == b.componentes


def test_hocolim_sobre_indice_discreto_es_la_union(cargar):
    X = nervio(cargar("coigualador").base, 3)
    Y = nervio(cargar("zmod2").base, 3)
    indice = categoria_discreta(["a", "b"])
    diagrama = DiagramaSimplicial(indice, {"a": X, "b": Y}, {"id_a": mapa_identidad(X), "id_b": mapa_identidad(Y)})
    H = hocolim_bousfield_kan(diagrama)
    U = union_disjunta([X, Y])
    assert H.conteos() == U.conteos()
    assert len(componentes_conexas(H)) == len(componentes_conexas(U)) == 2
    assert auditar_identidades(H) == []


def test_hocolim_de_un_pushout_con_apice_vacio(cargar):
    indice = cargar("pushout_apex").base
    vacio = nervio(categoria_discreta([]), 3)
    punto = nervio(categoria_terminal(), 3)
    desde_vacio = MapaSimplicial(vacio, punto, [{} for _ in range(4)])
    diagrama = DiagramaSimplicial(
        indice,
        {"a": vacio, "b": punto, "c": punto},
        {"f": desde_vacio, "g": desde_vacio, "id_a": mapa_identidad(vacio),
         "id_b": mapa_identidad(punto), "id_c": mapa_identidad(punto)},
    )
    H = hocolim_bousfield_kan(diagrama)
    assert len(componentes_conexas(H)) == 2
    assert H.conteos() == [2, 2, 2, 2]
