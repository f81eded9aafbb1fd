"""
Servicio de oráculo (caja negra).
Las cuatro funciones de un bit con contador de consultas observable y la
solución clásica de referencia de dos consultas.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Iterator

from loguru import logger


class Classification(str, Enum):
    """Tipo de la función: constante (f(0) = f(1)) o balanceada."""

    CONSTANT = "Constant"
    BALANCED = "Balanced"


class ErrorParametro(ValueError):
    """Parámetro fuera de dominio (bit, signo, a = 0...)."""


def validar_bit(valor: int, nombre: str = "bit") -> int:
    if isinstance(valor, bool) or valor not in (0, 1):
        raise ErrorParametro(f"{nombre} debe ser 0 o 1, no {valor!r}")
    return valor


@dataclass(frozen=True)
class BitFn:
    """Una de las cuatro funciones f: {0,1} -> {0,1}, dada por su tabla (f(0), f(1))."""

    f0: int
    f1: int

    def __post_init__(self):
        validar_bit(self.f0, "f(0)")
        validar_bit(self.f1, "f(1)")

    @property
    def kind(self) -> Classification:
        return Classification.CONSTANT if self.f0 == self.f1 else Classification.BALANCED

    @property
    def etiqueta(self) -> str:
        """Nombre "f0f1" usado por la CLI y los reportes: "00", "01", "10", "11"."""
        return f"{self.f0}{self.f1}"

    def __call__(self, x: int) -> int:
        return self.f1 if validar_bit(x, "x") else self.f0


def todas_las_funciones() -> Iterator[BitFn]:
    """Las cuatro funciones en orden ascendente: 00, 01, 10, 11."""
    for f0 in (0, 1):
        for f1 in (0, 1):
            yield BitFn(f0, f1)


class OracleHandle:
    """
    Caja negra con contador de consultas.

    Los resolutores reciben sólo el handle. El contador es monótono y sube
    exactamente 1 por consulta clásica, por aplicación de U_f o por evaluación
    de C_f. Los constructores privilegiados de U_f y C_f (módulos cuántico y
    de-cuantizado) usan ``_tabla`` y ``_cobrar_consulta``; nada más debe hacerlo.

    No es seguro compartirlo entre hilos sin exclusión externa.
    """

    __slots__ = ("_fn", "_queries")

    def __init__(self, fn: BitFn):
        self._fn = fn
        self._queries = 0

    @property
    def queries(self) -> int:
        return self._queries

    def _cobrar_consulta(self) -> None:
        self._queries += 1
        logger.debug(f"📞 Consulta #{self._queries} al oráculo")

    def _tabla(self) -> BitFn:
        """Acceso privilegiado a la tabla, sin cobro; cada uso operativo debe cobrarse aparte."""
        return self._fn

    def __repr__(self) -> str:
        return f"OracleHandle(queries={self._queries})"


def new_oracle(f0: int, f1: int) -> OracleHandle:
    return OracleHandle(BitFn(f0, f1))


def query(h: OracleHandle, x: int) -> int:
    """Consulta clásica f(x); cuesta una consulta."""
    validar_bit(x, "x")
    h._cobrar_consulta()
    return h._tabla()(x)


def query_count(h: OracleHandle) -> int:
    return h.queries


def classify_baseline_with_witness(h: OracleHandle):
    """Calcula f(0) y f(1) y los compara: dos consultas. Devuelve (clasificación, (f(0), f(1)))."""
    f0 = query(h, 0)
    f1 = query(h, 1)
    clasificacion = Classification.CONSTANT if f0 == f1 else Classification.BALANCED
    logger.debug(f"🔍 Referencia clásica: f(0)={f0}, f(1)={f1} -> {clasificacion.value}")
    return clasificacion, (f0, f1)


def classify_baseline(h: OracleHandle) -> Classification:
    return classify_baseline_with_witness(h)[0]
