import pytest

from logica.categorias.categoria_finita import validar_categoria
from logica.categorias.categoria_presentada import CategoriaPresentada, completar_knuth_bendix
from logica.errores import ErrorDeConfluencia, ErrorDeValidacion, PresupuestoExcedido


def test_categoria_libre_sobre_un_camino():
    P = CategoriaPresentada(["a", "b", "c"], {"f": ("a", "b"), "g": ("b", "c")})
    C = P.a_categoria_finita()
    assert len(C.morfismos) == 6
    assert C.componer("g", "f") == "g*f"
    assert C.morfismos["g*f"] == ("a", "c")
    assert validar_categoria(C).es_valida


def test_grupo_de_orden_dos():
    P = CategoriaPresentada(["o"], {"g": ("o", "o")}, [(("g", "g"), ())])
    C = P.a_categoria_finita()
    assert sorted(C.morfismos) == ["g", "id_o"]
    assert C.componer("g", "g") == "id_o"


def test_grupo_ciclico_de_orden_tres():
    P = CategoriaPresentada(["o"], {"r": ("o", "o")}, [(("r", "r", "r"), ())])
    C = P.a_categoria_finita()
    assert len(C.morfismos) == 3
    assert validar_categoria(C).es_valida


def test_completado_agrega_reglas_de_pares_criticos():
    # x y = y x junto con x x = x: el sistema ya es confluente tras interreducir
    sistema = completar_knuth_bendix([(("x", "y"), ("y", "x")), (("x", "x"), ("x",))], ["x", "y"])
    assert sistema.reducir(("y", "x", "x", "y")) == sistema.reducir(("x", "y", "y"))


def test_relacion_entre_caminos_no_paralelos():
    with pytest.raises(ErrorDeValidacion):
        CategoriaPresentada(["a", "b"], {"f": ("a", "b"), "g": ("a", "b")}, [(("f",), ())])


def test_categoria_infinita_no_cierra():
    P = CategoriaPresentada(["o"], {"l": ("o", "o")}, max_longitud_palabra=4)
    with pytest.raises(PresupuestoExcedido):
        P.a_categoria_finita()


def test_monoide_de_trenzas_no_converge():
    P = CategoriaPresentada(
        ["o"],
        {"a": ("o", "o"), "b": ("o", "o")},
        [(("a", "b", "a"), ("b", "a", "b"))],
        max_pasadas_completado=3,
    )
    with pytest.raises(ErrorDeConfluencia) as error:
        P.a_categoria_finita()
    assert error.value.par_critico is not None
    assert error.value.a_diccionario()["error"] == "confluencia"
