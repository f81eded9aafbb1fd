"""
Solución clásica de-cuantizada del problema de Deutsch.

La función de un bit se embebe en un espacio de dimensión dos, Q[i] o Z[√2]:

    C_f(a + b·u) = (-1)^(0⊕f(0)) a + (-1)^(1⊕f(1)) b·u,   u = i o u = √2

y una única evaluación de C_f sobre una "superposición" (1+i o 1+√2) basta
para decidir. Cada evaluación de C_f cobra exactamente una consulta.
"""

from enum import Enum
from typing import Callable, Tuple

from loguru import logger

from services.oracle_service import BitFn, Classification, ErrorParametro, OracleHandle
from utils.exactnum import GaussRat, ONE, Rat, Surd2, g_conj, g_mul, s_conj, s_mul

# Sondas y multiplicadores fijos
PROBE_GAUSS = GaussRat(ONE, ONE)          # 1 + i
MULT_GAUSS = GaussRat(-ONE, ONE)          # i - 1
MULT_GAUSS_PLUS = GaussRat(ONE, ONE)      # i + 1
PROBE_SURD = Surd2(1, 1)                  # 1 + √2
MULT_SURD = Surd2(-1, 1)                  # √2 - 1

# Subconjunto finito de Z[√2] suficiente para la solución: |a|, |b| <= 3
SURD_BOUND = 3


class FamilySign(str, Enum):
    """Variante de la familia: a(i-1) (real => balanceada) o a(i+1) (real => constante)."""

    MINUS = "minus"
    PLUS = "plus"


class ErrorCotaSurd(AssertionError):
    """Un valor de Z[√2] salió del subconjunto |a|, |b| <= 3."""


def _signo(exponente: int) -> int:
    return -1 if exponente % 2 else 1


class CfBox:
    """
    Análogo clásico C_f de U_f, construido desde el handle del oráculo.

    Construir la caja no cuesta nada; cada evaluación cobra una consulta.
    """

    __slots__ = ("_handle",)

    def __init__(self, handle: OracleHandle):
        self._handle = handle

    def _coeficientes(self) -> Tuple[int, int]:
        f = self._handle._tabla()
        self._handle._cobrar_consulta()
        return _signo(0 ^ f.f0), _signo(1 ^ f.f1)

    def __call__(self, z: GaussRat) -> GaussRat:
        return cf_eval(self, z)


def cf_eval(box: CfBox, z: GaussRat) -> GaussRat:
    """C_f(a + bi) = (-1)^(0⊕f(0)) a + (-1)^(1⊕f(1)) bi. Una consulta."""
    real, imaginario = box._coeficientes()
    return GaussRat(z.re * real, z.im * imaginario)


def cf_eval_surd(box: CfBox, s: Surd2) -> Surd2:
    """C_f(a + b√2) = (-1)^(0⊕f(0)) a + (-1)^(1⊕f(1)) b√2. Una consulta."""
    real, irracional = box._coeficientes()
    return Surd2(s.a * real, s.b * irracional)


def closed_form_map(f0: int, f1: int) -> Callable[[GaussRat], GaussRat]:
    """Forma cerrada de C_f en Q[i]: C_00 = conj, C_01 = id, C_10 = -id, C_11 = -conj."""
    mapas = {
        (0, 0): g_conj,
        (0, 1): lambda x: x,
        (1, 0): lambda x: -x,
        (1, 1): lambda x: -g_conj(x),
    }
    fn = BitFn(f0, f1)
    return mapas[(fn.f0, fn.f1)]


def closed_form_map_surd(f0: int, f1: int) -> Callable[[Surd2], Surd2]:
    """La misma tabla en Z[√2], con la conjugación a - b√2."""
    mapas = {
        (0, 0): s_conj,
        (0, 1): lambda x: x,
        (1, 0): lambda x: -x,
        (1, 1): lambda x: -s_conj(x),
    }
    fn = BitFn(f0, f1)
    return mapas[(fn.f0, fn.f1)]


def solve_gauss_with_witness(h: OracleHandle) -> Tuple[Classification, GaussRat]:
    """(i-1)·C_f(1+i): real => balanceada, si no constante. Una consulta."""
    producto = g_mul(MULT_GAUSS, cf_eval(CfBox(h), PROBE_GAUSS))
    clasificacion = Classification.BALANCED if producto.is_real else Classification.CONSTANT
    logger.info(f"🔷 Q[i]: (i-1)·C_f(1+i) = {producto} -> {clasificacion.value}")
    return clasificacion, producto


def solve_gauss(h: OracleHandle) -> Classification:
    return solve_gauss_with_witness(h)[0]


def solve_gauss_family_with_witness(
    h: OracleHandle,
    a: Rat,
    sign: FamilySign = FamilySign.MINUS,
) -> Tuple[Classification, GaussRat]:
    """
    Familia a(i∓1)·C_f(1+i) para todo racional a distinto de cero.

    Con a(i-1) un resultado real indica función balanceada; con a(i+1),
    función constante. Una consulta.
    """
    if not isinstance(a, Rat):
        raise ErrorParametro(f"a debe ser un Rat, no {type(a).__name__}")
    if a.num == 0:
        raise ErrorParametro("a debe ser distinto de cero: con a = 0 el producto es 0 y no decide")
    sign = FamilySign(sign)

    base = MULT_GAUSS if sign is FamilySign.MINUS else MULT_GAUSS_PLUS
    multiplicador = g_mul(GaussRat(a), base)
    producto = g_mul(multiplicador, cf_eval(CfBox(h), PROBE_GAUSS))

    real_es_balanceada = sign is FamilySign.MINUS
    if producto.is_real == real_es_balanceada:
        clasificacion = Classification.BALANCED
    else:
        clasificacion = Classification.CONSTANT

    logger.debug(f"🔶 Familia a={a} ({sign.value}): producto {producto} -> {clasificacion.value}")
    return clasificacion, producto


def solve_gauss_family(h: OracleHandle, a: Rat, sign: FamilySign = FamilySign.MINUS) -> Classification:
    return solve_gauss_family_with_witness(h, a, sign)[0]


def _verificar_cota(*valores: Surd2) -> None:
    for valor in valores:
        if abs(valor.a) > SURD_BOUND or abs(valor.b) > SURD_BOUND:
            raise ErrorCotaSurd(f"{valor} fuera de |a|, |b| <= {SURD_BOUND}")


def solve_surd_with_witness(h: OracleHandle) -> Tuple[Classification, Surd2]:
    """(√2-1)·C_f(1+√2): racional => balanceada, si no constante. Una consulta."""
    imagen = cf_eval_surd(CfBox(h), PROBE_SURD)
    producto = s_mul(MULT_SURD, imagen)
    if __debug__:
        _verificar_cota(PROBE_SURD, MULT_SURD, imagen, producto)

    clasificacion = Classification.BALANCED if producto.is_rational else Classification.CONSTANT
    logger.info(f"🔹 Z[√2]: (√2-1)·C_f(1+√2) = {producto.surd_first_str()} -> {clasificacion.value}")
    return clasificacion, producto


def solve_surd(h: OracleHandle) -> Classification:
    return solve_surd_with_witness(h)[0]

