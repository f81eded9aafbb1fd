"""
Pruebas de las soluciones de-cuantizadas en Q[i] y Z[√2].
"""

import sys
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

# Agregar el directorio raíz al path
sys.path.append(str(Path(__file__).parent))

from agents.dequant_solver import (
    CfBox,
    ErrorCotaSurd,
    FamilySign,
    PROBE_GAUSS,
    PROBE_SURD,
    SURD_BOUND,
    _verificar_cota,
    cf_eval,
    cf_eval_surd,
    closed_form_map,
    closed_form_map_surd,
    solve_gauss,
    solve_gauss_family,
    solve_gauss_family_with_witness,
    solve_gauss_with_witness,
    solve_surd,
    solve_surd_with_witness,
)
from services.oracle_service import Classification, ErrorParametro, classify_baseline, new_oracle, query_count
from utils.exactnum import GaussRat, Rat, Surd2, g_conj, s_conj

TABLAS = [(0, 0), (0, 1), (1, 0), (1, 1)]

rats = st.builds(Rat, st.integers(-100, 100), st.integers(1, 100))
gauss = st.builds(GaussRat, rats, rats)
surds = st.builds(Surd2, st.integers(-1000, 1000), st.integers(-1000, 1000))
tablas = st.sampled_from(TABLAS)
a_no_nulo = st.builds(Rat, st.integers(-50, 50).filter(lambda n: n != 0), st.integers(1, 50))

PRODUCTOS_GAUSS = {(0, 0): "2i", (0, 1): "-2", (1, 0): "2", (1, 1): "-2i"}
PRODUCTOS_SURD = {(0, 0): Surd2(-3, 2), (0, 1): Surd2(1), (1, 0): Surd2(-1), (1, 1): Surd2(3, -2)}


def _esperado(f0, f1):
    return Classification.CONSTANT if f0 == f1 else Classification.BALANCED


@given(tablas, gauss)
@settings(max_examples=200)
def test_cf_coincide_con_forma_cerrada(tabla, z):
    h = new_oracle(*tabla)
    assert cf_eval(CfBox(h), z) == closed_form_map(*tabla)(z)
    assert query_count(h) == 1


@given(tablas, surds)
@settings(max_examples=200)
def test_cf_surd_coincide_con_forma_cerrada(tabla, s):
    h = new_oracle(*tabla)
    assert cf_eval_surd(CfBox(h), s) == closed_form_map_surd(*tabla)(s)
    assert query_count(h) == 1


@given(gauss)
def test_formas_cerradas_nombradas(z):
    assert closed_form_map(0, 0)(z) == g_conj(z)
    assert closed_form_map(0, 1)(z) == z
    assert closed_form_map(1, 0)(z) == -z
    assert closed_form_map(1, 1)(z) == -g_conj(z)


@given(surds)
def test_formas_cerradas_surd_nombradas(s):
    assert closed_form_map_surd(0, 0)(s) == s_conj(s)
    assert closed_form_map_surd(1, 1)(s) == -s_conj(s)


@given(tablas, gauss, gauss, rats)
@settings(max_examples=200)
def test_linealidad_en_q_i(tabla, z, w, r):
    caja = CfBox(new_oracle(*tabla))
    assert cf_eval(caja, z + w) == cf_eval(caja, z) + cf_eval(caja, w)
    assert cf_eval(caja, GaussRat(r) * z) == GaussRat(r) * cf_eval(caja, z)


@given(tablas, surds, surds, st.integers(-100, 100))
@settings(max_examples=200)
def test_linealidad_en_z_raiz_2(tabla, s, t, k):
    caja = CfBox(new_oracle(*tabla))
    assert cf_eval_surd(caja, s + t) == cf_eval_surd(caja, s) + cf_eval_surd(caja, t)
    assert cf_eval_surd(caja, Surd2(k) * s) == Surd2(k) * cf_eval_surd(caja, s)


def test_construir_caja_no_cobra():
    h = new_oracle(0, 1)
    caja = CfBox(h)
    assert query_count(h) == 0
    caja(PROBE_GAUSS)
    assert query_count(h) == 1


@pytest.mark.parametrize("f0, f1", TABLAS)
def test_solve_gauss(f0, f1):
    h = new_oracle(f0, f1)
    clasificacion, producto = solve_gauss_with_witness(h)
    assert str(producto) == PRODUCTOS_GAUSS[(f0, f1)]
    assert clasificacion == _esperado(f0, f1)
    assert query_count(h) == 1
    assert solve_gauss(new_oracle(f0, f1)) == _esperado(f0, f1)


@pytest.mark.parametrize("f0, f1", TABLAS)
def test_solve_surd(f0, f1):
    h = new_oracle(f0, f1)
    clasificacion, producto = solve_surd_with_witness(h)
    assert producto == PRODUCTOS_SURD[(f0, f1)]
    assert clasificacion == _esperado(f0, f1)
    assert query_count(h) == 1
    assert solve_surd(new_oracle(f0, f1)) == _esperado(f0, f1)


def test_producto_surd_con_raiz_delante():
    _, producto = solve_surd_with_witness(new_oracle(0, 0))
    assert producto.surd_first_str() == "2√2-3"
    assert str(producto) == "-3+2√2"


@given(tablas, a_no_nulo, st.sampled_from(list(FamilySign)))
@settings(max_examples=200)
def test_familia_para_todo_a_no_nulo(tabla, a, signo):
    h = new_oracle(*tabla)
    assert solve_gauss_family(h, a, signo) == classify_baseline(new_oracle(*tabla))
    assert query_count(h) == 1


@pytest.mark.parametrize("f0, f1", TABLAS)
def test_familia_con_a_uno_coincide_con_gauss(f0, f1):
    _, producto = solve_gauss_family_with_witness(new_oracle(f0, f1), Rat(1), FamilySign.MINUS)
    assert str(producto) == PRODUCTOS_GAUSS[(f0, f1)]


def test_familia_variante_plus():
    # a(i+1)·C_f(1+i): real => constante
    clasificacion, producto = solve_gauss_family_with_witness(new_oracle(0, 0), Rat(3), FamilySign.PLUS)
    assert producto == GaussRat(6)
    assert clasificacion == Classification.CONSTANT


def test_familia_rechaza_a_cero():
    h = new_oracle(0, 1)
    with pytest.raises(ErrorParametro):
        solve_gauss_family(h, Rat(0))
    assert query_count(h) == 0


def test_familia_rechaza_a_no_racional():
    with pytest.raises(ErrorParametro):
        solve_gauss_family(new_oracle(0, 1), 1.5)


def test_familia_rechaza_signo_desconocido():
    with pytest.raises(ValueError):
        solve_gauss_family(new_oracle(0, 1), Rat(1), "times")


@pytest.mark.parametrize("f0, f1", TABLAS)
def test_cota_surd(f0, f1):
    imagen = cf_eval_surd(CfBox(new_oracle(f0, f1)), PROBE_SURD)
    _, producto = solve_surd_with_witness(new_oracle(f0, f1))
    for valor in (imagen, producto):
        assert abs(valor.a) <= SURD_BOUND and abs(valor.b) <= SURD_BOUND


def test_cota_surd_detecta_valores_fuera():
    with pytest.raises(ErrorCotaSurd):
        _verificar_cota(Surd2(4, 0))
