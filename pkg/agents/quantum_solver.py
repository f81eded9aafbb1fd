"""
Solución cuántica del problema de Deutsch.
Simulación exacta de dos Qbits con vectores de estado sobre Q[i].

Orden de la base: |00>, |01>, |10>, |11>, que corresponden a las salidas 1..4
del paso de medición; el primer Qbit es el de control (x) y el segundo el
objetivo (y). La "segunda salida posible" es por tanto |01> y la cuarta |11>.

Sólo aparece la Hadamard de dos Qbits (entradas ±1/2): todo el circuito se
cierra sobre los racionales y las probabilidades salen exactamente 0 o 1.
"""

import math
from dataclasses import dataclass
from typing import Dict, Iterable, Optional, Tuple

import numpy as np
from loguru import logger

from services.oracle_service import Classification, OracleHandle, validar_bit
from utils.exactnum import GaussRat, HALF, ONE, Rat, ZERO, g_conj


class ErrorNormalizacion(ValueError):
    """Estado cuya suma de |amp|² no es exactamente 1."""


class ErrorInterno(RuntimeError):
    """Resultado imposible por construcción: indica un error de implementación."""


def _a_gauss(valor) -> GaussRat:
    return valor if isinstance(valor, GaussRat) else GaussRat(valor)


_A_GAUSS = np.frompyfunc(_a_gauss, 1, 1)
_CONJ = np.frompyfunc(g_conj, 1, 1)


def _arreglo_exacto(valores, forma: Tuple[int, ...]) -> np.ndarray:
    arreglo = _A_GAUSS(np.asarray(valores, dtype=object))
    arreglo = np.asarray(arreglo, dtype=object)
    if arreglo.shape != forma:
        raise ValueError(f"Forma {arreglo.shape} inválida, se esperaba {forma}")
    arreglo.flags.writeable = False
    return arreglo


class State4:
    """Vector de estado de dos Qbits con cuatro amplitudes exactas."""

    __slots__ = ("_amp",)

    def __init__(self, amplitudes: Iterable):
        self._amp = _arreglo_exacto(list(amplitudes), (4,))

    @classmethod
    def basis(cls, indice: int) -> "State4":
        """Vector de la base computacional; ``basis(1)`` es |01>."""
        return cls(ONE if k == indice else ZERO for k in range(4))

    @property
    def amp(self) -> Tuple[GaussRat, ...]:
        return tuple(self._amp)

    @property
    def vector(self) -> np.ndarray:
        return self._amp

    def norm_squared(self) -> Rat:
        total = ZERO
        for amplitud in self._amp:
            total = total + amplitud.norm()
        return total

    @property
    def is_real(self) -> bool:
        return all(amplitud.is_real for amplitud in self._amp)

    def __neg__(self) -> "State4":
        return State4(-amplitud for amplitud in self._amp)

    def __eq__(self, other) -> bool:
        if not isinstance(other, State4):
            return NotImplemented
        return self.amp == other.amp

    def __hash__(self) -> int:
        return hash(self.amp)

    def __str__(self) -> str:
        return "(" + ",".join(str(amplitud) for amplitud in self._amp) + ")"

    def __repr__(self) -> str:
        return f"State4{self}"


class Mat4:
    """Matriz 4x4 inmutable con entradas en Q[i]."""

    __slots__ = ("_entradas",)

    def __init__(self, entradas):
        self._entradas = _arreglo_exacto(entradas, (4, 4))

    @classmethod
    def identity(cls) -> "Mat4":
        return cls([[ONE if i == j else ZERO for j in range(4)] for i in range(4)])

    @classmethod
    def zeros(cls) -> "Mat4":
        return cls([[ZERO] * 4 for _ in range(4)])

    @property
    def entradas(self) -> np.ndarray:
        return self._entradas

    def __getitem__(self, indice) -> GaussRat:
        return self._entradas[indice]

    def dagger(self) -> "Mat4":
        """Conjugada traspuesta M†."""
        return Mat4(_CONJ(self._entradas.T))

    def with_entry(self, i: int, j: int, valor) -> "Mat4":
        """Copia con la entrada (i, j) reemplazada (índices desde 0)."""
        entradas = self._entradas.copy()
        entradas.flags.writeable = True
        entradas[i, j] = _a_gauss(valor)
        return Mat4(entradas)

    def __matmul__(self, other):
        if isinstance(other, State4):
            return mat_apply(self, other)
        if isinstance(other, Mat4):
            return Mat4(self._entradas @ other._entradas)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, Mat4):
            return NotImplemented
        return bool((self._entradas == other._entradas).all())

    def __hash__(self) -> int:
        return hash(tuple(self._entradas.flat))

    def __str__(self) -> str:
        filas = ["[" + ", ".join(str(x) for x in fila) + "]" for fila in self._entradas]
        return "\n".join(filas)


class OracleMatrix(Mat4):
    """
    U_f construida desde un handle.

    Construirla no cuesta consultas; cada aplicación a un estado con
    ``mat_apply`` cobra exactamente una. Los productos matriz-matriz
    (p. ej. para verificar unitariedad) no son aplicaciones y no cobran.
    """

    __slots__ = ("_handle",)

    def __init__(self, entradas, handle: OracleHandle):
        super().__init__(entradas)
        self._handle = handle


@dataclass(frozen=True)
class Distribution4:
    """Distribución exacta de las cuatro salidas posibles."""

    p1: Rat
    p2: Rat
    p3: Rat
    p4: Rat

    def as_tuple(self) -> Tuple[Rat, Rat, Rat, Rat]:
        return (self.p1, self.p2, self.p3, self.p4)

    def sample(self, seed: int, shots: int) -> Dict[int, int]:
        """
        Muestreo sembrado de ``shots`` mediciones; sólo demostrativo.

        Se sortean enteros sobre el denominador común, así que las
        frecuencias relativas siguen exactamente a p1..p4.
        """
        if shots < 0:
            raise ValueError("El número de disparos no puede ser negativo")
        comun = math.lcm(*(p.den for p in self.as_tuple()))
        pesos = np.array([p.num * (comun // p.den) for p in self.as_tuple()], dtype=np.int64)
        limites = np.cumsum(pesos)
        rng = np.random.default_rng(seed)
        sorteos = rng.integers(0, comun, size=shots)
        salidas = np.searchsorted(limites, sorteos, side="right")
        conteos = np.bincount(salidas, minlength=4)
        return {k + 1: int(conteos[k]) for k in range(4)}

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.as_tuple()) + ")"


@dataclass(frozen=True)
class DeutschTrace:
    """Evolución paso a paso: V, HV, U_fHV, HU_fHV, medición y decisión."""

    v: State4
    hv: State4
    ufhv: State4
    hufhv: State4
    distribution: Distribution4
    classification: Classification


def oracle_matrix(h: OracleHandle) -> OracleMatrix:
    """U_f en bloques: |x>|y> -> |x>|y ⊕ f(x)>. Construirla no cobra consultas."""
    f = h._tabla()
    entradas = [
        [1 - f.f0, f.f0, 0, 0],
        [f.f0, 1 - f.f0, 0, 0],
        [0, 0, 1 - f.f1, f.f1],
        [0, 0, f.f1, 1 - f.f1],
    ]
    return OracleMatrix(entradas, h)


def hadamard4() -> Mat4:
    """Hadamard de dos Qbits H⊗H, con entradas ±1/2."""
    signos = np.array([[1, 1], [1, -1]], dtype=object)
    return Mat4(np.kron(signos, signos) * HALF)


def mat_apply(M: Mat4, v: State4) -> State4:
    """Producto exacto M·v; si M es una U_f cobra una consulta a su oráculo."""
    resultado = State4(M.entradas @ v.vector)
    if isinstance(M, OracleMatrix):
        M._handle._cobrar_consulta()
    return resultado


def kickback_state(h: OracleHandle) -> State4:
    """
    Forma cerrada de U_f sobre (|0>+|1>)(|0>-|1>)/2:
    (1/2)(-1)^f(0) (|0> + (-1)^(f(0)⊕f(1)) |1>)(|0> - |1>). Cobra una consulta.
    """
    f = h._tabla()
    h._cobrar_consulta()
    fase_global = HALF * (-1) ** f.f0
    fase_relativa = (-1) ** (f.f0 ^ f.f1)
    return State4(fase_global * c for c in (1, -1, fase_relativa, -fase_relativa))


def control_minus_state(x: int) -> State4:
    """|x>(|0> - |1>) sin normalizar."""
    validar_bit(x, "x")
    return State4(ONE if k == 2 * x else -ONE if k == 2 * x + 1 else ZERO for k in range(4))


def kickback_basis_state(h: OracleHandle, x: int) -> State4:
    """U_f aplicada a |x>(|0> - |1>); debe valer (-1)^f(x) por la entrada. Cobra una consulta."""
    return mat_apply(oracle_matrix(h), control_minus_state(x))


def measure(v: State4) -> Distribution4:
    """p_k = |amp_k|² exactas; rechaza estados no normalizados."""
    total = v.norm_squared()
    if total != ONE:
        raise ErrorNormalizacion(f"Estado no normalizado: suma |amp|² = {total}")
    return Distribution4(*(amplitud.norm() for amplitud in v.amp))


def is_unitary(M: Mat4) -> bool:
    """M·M† = I exactamente."""
    return (M @ M.dagger()) == Mat4.identity()


def _decidir(distribucion: Distribution4) -> Classification:
    if distribucion.p2 == ONE:
        return Classification.CONSTANT
    if distribucion.p4 == ONE:
        return Classification.BALANCED
    raise ErrorInterno(f"Ni p2 ni p4 valen 1: {distribucion}")


def trace_deutsch(h: OracleHandle, hadamard: Optional[Mat4] = None) -> DeutschTrace:
    """Pasos 1-5 del algoritmo con una sola aplicación de U_f."""
    H = hadamard if hadamard is not None else hadamard4()

    v = State4.basis(1)
    hv = mat_apply(H, v)
    ufhv = mat_apply(oracle_matrix(h), hv)
    hufhv = mat_apply(H, ufhv)
    logger.debug(f"🌀 HV={hv} U_fHV={ufhv} HU_fHV={hufhv}")

    distribucion = measure(hufhv)
    clasificacion = _decidir(distribucion)
    logger.info(f"⚛️ Deutsch cuántico: distribución {distribucion} -> {clasificacion.value}")

    return DeutschTrace(v, hv, ufhv, hufhv, distribucion, clasificacion)


def run_deutsch(h: OracleHandle, hadamard: Optional[Mat4] = None) -> Tuple[Distribution4, Classification]:
    traza = trace_deutsch(h, hadamard)
    return traza.distribution, traza.classification
