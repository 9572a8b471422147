import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy.matrices.normalforms import smith_normal_form
from sympy.polys.domains import ZZ

from logica.categorias.categoria_finita import categoria_terminal
from logica.categorias.relativas import automorfismos_homotopicos
from logica.errores import ErrorDeCotas, ErrorDeValidacion
from logica.homologia import (
    GrupoDeHomologia,
    cadenas_normalizadas,
    certificado_de_equivalencia,
    cono_algebraico,
    factores_invariantes,
    factores_invariantes_dispersos,
    forma_normal_smith,
    homologia_hasta,
)
from logica.simplicial.conjuntos import MapaSimplicial, mapa_identidad, union_disjunta
from logica.simplicial.nervios import complejo_clasificante, nervio


@st.composite
def matrices(draw, cuadrada=False):
    filas = draw(st.integers(min_value=1, max_value=4))
    columnas = filas if cuadrada else draw(st.integers(min_value=1, max_value=4))
    entradas = draw(st.lists(st.integers(min_value=-6, max_value=6), min_size=filas * columnas, max_size=filas * columnas))
    return [entradas[i * columnas:(i + 1) * columnas] for i in range(filas)]


def al_punto(X, K):
    punto = nervio(categoria_terminal(), K)
    componentes = [{s: punto.simplices[k][0] for s in X.simplices[k]} for k in range(K + 1)]
    return MapaSimplicial(X, punto, componentes)


@settings(max_examples=100, deadline=None)
@given(matrices())
def test_snf_reconstruye_la_matriz(datos):
    A = sympy.Matrix(datos)
    snf = forma_normal_smith(datos)
    assert snf.izquierda * snf.diagonal * snf.derecha == A
    assert abs(snf.izquierda.det()) == 1
    assert abs(snf.derecha.det()) == 1
    factores = snf.factores()
    assert all(f > 0 for f in factores)
    assert all(b % a == 0 for a, b in zip(factores, factores[1:]))
    assert len(factores) == A.rank()
    for i in range(min(A.shape)):
        for j in range(min(A.shape)):
            if i != j:
                assert snf.diagonal[i, j] == 0


@settings(max_examples=100, deadline=None)
@given(matrices(cuadrada=True))
def test_snf_coincide_con_sympy(datos):
    propios = factores_invariantes(datos)
    esperada = smith_normal_form(sympy.Matrix(datos), domain=ZZ)
    referencia = tuple(sorted(abs(int(esperada[i, i])) for i in range(esperada.rows) if esperada[i, i] != 0))
    assert tuple(sorted(propios)) == referencia


@settings(max_examples=100, deadline=None)
@given(matrices(cuadrada=True))
def test_determinante_es_producto_de_factores(datos):
    A = sympy.Matrix(datos)
    factores = factores_invariantes(datos)
    if len(factores) == A.rows:
        producto = 1
        for f in factores:
            producto *= f
        assert producto == abs(A.det())


@settings(max_examples=100, deadline=None)
@given(matrices())
def test_eliminacion_dispersa_coincide_con_densa(datos):
    columnas = []
    for j in range(len(datos[0])):
        columnas.append({i: fila[j] for i, fila in enumerate(datos) if fila[j]})
    assert factores_invariantes_dispersos(columnas) == tuple(sorted(factores_invariantes(datos)))


def test_grupo_de_homologia_valida_torsion():
    assert str(GrupoDeHomologia(1, (2,))) == "Z^1 ⊕ Z/2"
    assert GrupoDeHomologia(0).es_trivial()
    assert GrupoDeHomologia(2, (2, 4)).a_diccionario() == {"rank": 2, "torsion": [2, 4]}
    with pytest.raises(ErrorDeValidacion):
        GrupoDeHomologia(0, (2, 3))
    with pytest.raises(ErrorDeValidacion):
        GrupoDeHomologia(0, (1,))


def test_homologia_del_punto():
    assert homologia_hasta(nervio(categoria_terminal(), 3), 2) == [
        GrupoDeHomologia(1), GrupoDeHomologia(0), GrupoDeHomologia(0)
    ]


def test_homologia_del_circulo(cargar):
    # dos flechas paralelas a -> b
    X = nervio(cargar("coigualador").base, 3)
    assert homologia_hasta(X, 2) == [GrupoDeHomologia(1), GrupoDeHomologia(1), GrupoDeHomologia(0)]


def test_homologia_de_bz2(cargar):
    B = complejo_clasificante(automorfismos_homotopicos(cargar("zmod2"), "o"), 4)
    assert homologia_hasta(B, 3) == [
        GrupoDeHomologia(1), GrupoDeHomologia(0, (2,)), GrupoDeHomologia(0), GrupoDeHomologia(0, (2,))
    ]


def test_homologia_de_la_union_es_la_suma(cargar):
    circulo = nervio(cargar("coigualador").base, 4)
    bz2 = complejo_clasificante(automorfismos_homotopicos(cargar("zmod2"), "o"), 4)
    por_separado = [homologia_hasta(circulo, 3), homologia_hasta(bz2, 3)]
    union = homologia_hasta(union_disjunta([circulo, bz2]), 3)
    for grado, (a, b) in enumerate(zip(*por_separado)):
        assert union[grado] == GrupoDeHomologia(a.rango + b.rango, tuple(sorted(a.torsion + b.torsion)))
    assert union[1] == GrupoDeHomologia(1, (2,))


def test_cadenas_son_un_complejo(cargar):
    X = nervio(cargar("pushout_apex").base, 4)
    assert cadenas_normalizadas(X, 3).es_complejo()
    with pytest.raises(ErrorDeCotas):
        cadenas_normalizadas(X, 4)


def test_certificado_de_la_identidad(cargar):
    X = nervio(cargar("zmod2").base, 4)
    certificado = certificado_de_equivalencia(mapa_identidad(X), 3)
    assert certificado.aprobado
    assert certificado.grados_fallidos == []
    assert certificado.a_diccionario()["componentes_origen"] == 1


def test_certificado_detecta_pi0(cargar):
    X = nervio(cargar("discreta2").base, 3)
    certificado = certificado_de_equivalencia(al_punto(X, 3), 2)
    assert not certificado.aprobado
    assert not certificado.pi0_biyectivo
    assert (certificado.componentes_origen, certificado.componentes_destino) == (2, 1)


def test_certificado_detecta_homologia(cargar):
    X = nervio(cargar("coigualador").base, 3)
    mapa = al_punto(X, 3)
    assert cono_algebraico(mapa, 2).es_complejo()
    certificado = certificado_de_equivalencia(mapa, 2)
    assert certificado.pi0_biyectivo
    assert not certificado.aprobado
    assert certificado.grados_fallidos == [2]


def test_certificado_de_contraccion(cargar):
    # el nervio de la flecha es contráctil
    X = nervio(cargar("flecha_no_marcada").base, 4)
    assert certificado_de_equivalencia(al_punto(X, 4), 3).aprobado
