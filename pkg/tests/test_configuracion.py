import pytest

from logica.configuracion import PRESUPUESTO_POR_DEFECTO, VARIABLE_PRESUPUESTO, Cotas, presupuesto_global
from logica.errores import ErrorDeConfiguracion


def test_presupuesto_por_defecto(monkeypatch):
    monkeypatch.delenv(VARIABLE_PRESUPUESTO, raising=False)
    assert presupuesto_global() == PRESUPUESTO_POR_DEFECTO
    assert Cotas().presupuesto_simplices == PRESUPUESTO_POR_DEFECTO


def test_presupuesto_desde_el_entorno(monkeypatch):
    monkeypatch.setenv(VARIABLE_PRESUPUESTO, "1234")
    assert presupuesto_global() == 1234
    assert Cotas().presupuesto_simplices == 1234


@pytest.mark.parametrize("valor", ["muchos", "0", "-5"])
def test_presupuesto_invalido(monkeypatch, valor):
    monkeypatch.setenv(VARIABLE_PRESUPUESTO, valor)
    with pytest.raises(ErrorDeConfiguracion):
        presupuesto_global()


@pytest.mark.parametrize(
    "cambios",
    [
        {"grado_homologia": 4, "n_interna": 4},
        {"n_externa": -1},
        {"max_longitud_palabra": 0},
        {"direccion_insercion": "backward"},
        {"presupuesto_simplices": 0},
    ],
)
def test_cotas_invalidas(cambios):
    with pytest.raises(ErrorDeConfiguracion):
        Cotas().con(**cambios)


def test_cotas_validas():
    cotas = Cotas().con(n_externa=3, direccion_insercion="paper-literal")
    assert cotas.n_externa == 3
    assert cotas.validar() is cotas
