import pytest

from logica.categorias.categoria_finita import categoria_terminal, desde_tablas
from logica.categorias.relativas import (
    CategoriaRelativa,
    FuntorRelativo,
    clausura_dos_de_tres,
    funtor_identidad,
    validar_funtor,
)
from logica.errores import DiagramaNoFuntorial, ErrorDeConfiguracion, ErrorEstructural
from logica.hocolim_categorias import (
    DiagramaDeCategoriasRelativas,
    categoria_hocolim,
    cocono_canonico,
    diagrama_cofibra,
    diagrama_coigualador,
    sitios_de_insercion,
    testigos_de_insercion,
    validar_diagrama_relativo,
)
from logica.homologia import GrupoDeHomologia, homologia_hasta
from logica.simplicial.conjuntos import componentes_conexas
from logica.simplicial.nervios import nervio


def conteo(hocolim):
    return len(hocolim.base.objetos), len(hocolim.base.morfismos)


@pytest.mark.parametrize(
    "nombre, esperado",
    [
        ("terminal_flecha", (2, 3)),
        ("discreto", (3, 4)),
        ("pushout_points", (3, 5)),
        ("cofibra", (5, 9)),
        ("orbita", (4, 8)),
        ("vacio", (0, 0)),
    ],
)
@pytest.mark.parametrize("direccion", ["forward", "paper-literal"])
def test_tamano_del_hocolim(cargar_diagrama, nombre, esperado, direccion):
    assert conteo(categoria_hocolim(cargar_diagrama(nombre), direccion)) == esperado


def test_inserciones_de_la_cofibra(cargar_diagrama):
    H = categoria_hocolim(cargar_diagrama("cofibra"))
    assert sorted(H.insertados.values()) == ["ins[f|m|pt]", "ins[g|m|n0]", "ins[g|m|n1]"]
    assert H.base.morfismos["ins[g|m|n1]"] == ("a/m", "c/n1")
    # la inserción seguida del marcado interno es la inserción compuesta
    assert H.base.componer("c/w", "ins[g|m|n0]") == "ins[g|m|n1]"
    assert all(H.relativa.es_marcado(nombre) for nombre in H.insertados.values())
    assert H.relativa.es_marcado("c/w")


def test_direccion_literal_invierte_las_inserciones(cargar_diagrama):
    H = categoria_hocolim(cargar_diagrama("cofibra"), "paper-literal")
    assert H.base.morfismos["ins[g|m|n1]"] == ("c/n1", "a/m")
    assert H.base.componer("ins[g|m|n1]", "c/w") == "ins[g|m|n0]"


def test_direccion_desconocida(cargar_diagrama):
    with pytest.raises(ErrorDeConfiguracion):
        categoria_hocolim(cargar_diagrama("cofibra"), "backward")


def test_sitios_derechos_son_los_izquierdos_del_opuesto(cargar_diagrama):
    izquierdo = cargar_diagrama("cofibra")
    derecho = DiagramaDeCategoriasRelativas(izquierdo.indice, izquierdo.valores, izquierdo.funtores, "right")
    assert sitios_de_insercion(izquierdo, "g") == [("m", "n0"), ("m", "n1")]
    assert sitios_de_insercion(derecho, "g") == [("m", "n0")]
    espejo = derecho.opuesto()
    assert espejo.varianza == "left"
    assert validar_diagrama_relativo(espejo) == []
    for theta in izquierdo.indice.morfismos_no_identidad():
        assert sitios_de_insercion(derecho, theta) == sitios_de_insercion(espejo, theta)


def test_varianza_derecha_construye(cargar_diagrama):
    izquierdo = cargar_diagrama("cofibra")
    derecho = DiagramaDeCategoriasRelativas(izquierdo.indice, izquierdo.valores, izquierdo.funtores, "right")
    H = categoria_hocolim(derecho)
    # sin n1 entre los sitios de g: 5 identidades, c/w y dos inserciones
    assert conteo(H) == (5, 8)
    assert H.base.morfismos["ins[g|m|n0]"] == ("c/n0", "a/m")


def test_el_lazo_del_coigualador(cargar_diagrama):
    H = categoria_hocolim(cargar_diagrama("orbita"))
    X = nervio(H.base, 3)
    assert len(componentes_conexas(X)) == 1
    assert homologia_hasta(X, 2)[1] == GrupoDeHomologia(1)


def test_endomorfismo_usa_marcados_existentes(cargar):
    M = cargar("zmod2")
    indice = M.base
    diagrama = DiagramaDeCategoriasRelativas(
        indice, {"o": M}, {"g": funtor_identidad(M), "id_o": funtor_identidad(M)}
    )
    H = categoria_hocolim(diagrama)
    assert H.insertados == {}
    # un sustituto por testigo: la identidad y g
    assert H.sustitutos == {("g", "o", "o", "g"): "g", ("g", "o", "o", "id_o"): "id_o"}
    assert conteo(H) == (1, 2)


def test_cocono_canonico(cargar_diagrama):
    H = categoria_hocolim(cargar_diagrama("cofibra"))
    cocono = cocono_canonico(H)
    for inyeccion in cocono.inyecciones.values():
        assert validar_funtor(inyeccion) == []
    assert cocono.inyecciones["c"].morfismo("w") == "c/w"
    assert cocono.transformaciones["g"]["m"] == "ins[g|m|n0]"
    assert cocono.transformaciones["id_a"]["m"] == "id_a/m"


def test_cocono_exige_forward(cargar_diagrama):
    H = categoria_hocolim(cargar_diagrama("cofibra"), "paper-literal")
    with pytest.raises(ErrorEstructural):
        cocono_canonico(H)


def test_constructores_coinciden_con_los_archivos(cargar):
    fuente, destino = cargar("cofibra_fuente"), cargar("cofibra_destino")
    F = FuntorRelativo(fuente, destino, {"m": "n0"}, {"id_m": "id_n0"})
    assert conteo(categoria_hocolim(diagrama_cofibra(F))) == (5, 9)

    orbita = cargar("orbita")
    intercambio = FuntorRelativo(orbita, orbita, {"p": "q", "q": "p"}, {"id_p": "id_q", "id_q": "id_p"})
    assert conteo(categoria_hocolim(diagrama_coigualador(intercambio, funtor_identidad(orbita)))) == (4, 8)


def test_diagrama_no_funtorial(cargar):
    marcada, no_marcada = cargar("flecha_marcada"), cargar("flecha_no_marcada")
    F = FuntorRelativo(marcada, no_marcada, {"x": "0", "y": "1"}, {"w": "f", "id_x": "id_0", "id_y": "id_1"})
    with pytest.raises(DiagramaNoFuntorial) as error:
        diagrama_coigualador(F, F)
    assert any("no marcado" in v for v in error.value.violaciones)


def test_inserciones_compuestas_se_identifican():
    # índice a -f-> b -g-> c con h = g∘f, un punto en cada objeto
    indice = desde_tablas(["a", "b", "c"], {"f": ("a", "b"), "g": ("b", "c"), "h": ("a", "c")}, {("g", "f"): "h"})
    punto = CategoriaRelativa(categoria_terminal())
    diagrama = DiagramaDeCategoriasRelativas(
        indice,
        {alfa: punto for alfa in indice.objetos},
        {theta: funtor_identidad(punto) for theta in indice.morfismos},
    )
    H = categoria_hocolim(diagrama)
    assert conteo(H) == (3, 6)
    assert H.base.componer("ins[g|pt|pt]", "ins[f|pt|pt]") == "ins[h|pt|pt]"


@pytest.mark.parametrize("nombre", ["cofibra", "orbita", "pushout_points", "terminal_flecha"])
def test_marcado_es_punto_fijo_de_dos_de_tres(cargar_diagrama, nombre):
    H = categoria_hocolim(cargar_diagrama(nombre))
    assert clausura_dos_de_tres(H.relativa).marcados == H.relativa.marcados


def test_testigos_del_pushout_con_automorfismos(cargar_diagrama):
    diagrama = cargar_diagrama("pushout_zmod2")
    assert testigos_de_insercion(diagrama, "f") == [("pt", "o", "e"), ("pt", "o", "id_o")]
    assert testigos_de_insercion(diagrama, "g") == [("pt", "o", "g"), ("pt", "o", "id_o")]
    assert sitios_de_insercion(diagrama, "g") == [("pt", "o")]


def test_cada_testigo_tiene_su_insercion(cargar_diagrama):
    H = categoria_hocolim(cargar_diagrama("pushout_zmod2"))
    assert sorted(H.insertados.values()) == [
        "ins[f|pt|o|e]", "ins[f|pt|o|id_o]", "ins[g|pt|o|g]", "ins[g|pt|o|id_o]"
    ]
    # 3 identidades, b/e, c/g y dos inserciones hacia cada lado
    assert conteo(H) == (3, 9)
    # componer con el marcado interno cambia el testigo, no lo olvida
    assert H.base.componer("c/g", "ins[g|pt|o|id_o]") == "ins[g|pt|o|g]"
    assert H.base.componer("c/g", "ins[g|pt|o|g]") == "ins[g|pt|o|id_o]"
    assert H.base.componer("b/e", "ins[f|pt|o|id_o]") == "ins[f|pt|o|e]"
    assert H.base.componer("b/e", "ins[f|pt|o|e]") == "ins[f|pt|o|e]"


def test_el_pushout_conserva_la_torsion(cargar_diagrama):
    H = categoria_hocolim(cargar_diagrama("pushout_zmod2"))
    X = nervio(H.base, 4)
    assert homologia_hasta(X, 3) == [
        GrupoDeHomologia(1), GrupoDeHomologia(0, (2,)), GrupoDeHomologia(0), GrupoDeHomologia(0, (2,))
    ]


def test_orbita_con_autoequivalencia_marcada(cargar_diagrama):
    H = categoria_hocolim(cargar_diagrama("orbita_marcada"))
    assert len(H.insertados) == 8
    # dentro de cada copia p ≅ q y dos flechas, una por s y otra por t, de cada a/x a cada b/y
    assert conteo(H) == (4, 16)
    assert H.base.componer("ins[s|q|q]", "a/u") == "ins[s|p|q]"
    assert homologia_hasta(nervio(H.base, 3), 2) == [GrupoDeHomologia(1), GrupoDeHomologia(1), GrupoDeHomologia(0)]


def test_composicion_literal_con_varios_testigos(cargar_diagrama):
    H = categoria_hocolim(cargar_diagrama("pushout_zmod2"), "paper-literal")
    assert H.base.morfismos["ins[g|pt|o|g]"] == ("c/o", "a/pt")
    # la inserción de testigo g es c/g seguida de la de testigo identidad
    assert H.base.componer("ins[g|pt|o|g]", "c/g") == "ins[g|pt|o|id_o]"
    assert H.base.componer("ins[g|pt|o|id_o]", "c/g") == "ins[g|pt|o|g]"
