import pytest

from logica.categorias.categoria_finita import validar_categoria
from logica.categorias.relativas import equivalencias_de_potencia, potencia_de_funtor
from logica.grothendieck import construccion_de_grothendieck


def grothendieck_de_nivel(diagrama, n):
    D = diagrama.indice
    categorias = {alfa: equivalencias_de_potencia(M, n) for alfa, M in diagrama.valores.items()}
    funtores = {
        theta: potencia_de_funtor(diagrama.funtor(theta), categorias[D.origen(theta)], categorias[D.destino(theta)])
        for theta in D.morfismos
    }
    return construccion_de_grothendieck(D, categorias, funtores)


@pytest.mark.parametrize("nombre", ["pushout_points", "cofibra", "orbita", "discreto"])
@pytest.mark.parametrize("n", [0, 1])
def test_grothendieck_es_categoria(cargar_diagrama, nombre, n):
    G = grothendieck_de_nivel(cargar_diagrama(nombre), n)
    reporte = validar_categoria(G)
    assert reporte.es_valida, reporte.violaciones


def test_grothendieck_de_la_cofibra(cargar_diagrama):
    G = grothendieck_de_nivel(cargar_diagrama("cofibra"), 0)
    # en el nivel 0 coincide en tamaño con la categoría hocolim
    assert (len(G.objetos), len(G.morfismos)) == (5, 9)
    assert G.identidad(("c", ("n1",))) == (("c", ("n1",)), "id_c", (("n1",), ("n1",), ("id_n1",)))


def test_grothendieck_del_pushout_de_puntos(cargar_diagrama):
    G = grothendieck_de_nivel(cargar_diagrama("pushout_points"), 0)
    assert len(G.objetos) == 3
    assert len(G.morfismos) == 5
