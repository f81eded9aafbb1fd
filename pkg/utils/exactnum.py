"""
Aritmética exacta del sistema Deutsch.
Racionales (Rat), racionales gaussianos Q[i] (GaussRat) y el anillo Z[√2] (Surd2).

No hay coma flotante en ninguna operación: todo entero intermedio se verifica
contra el rango con signo de ``settings.INT_BITS`` bits y un desbordamiento es
un error, nunca un wraparound silencioso.

Formato de texto:
- Rat: ``"n"`` si el denominador es 1, ``"n/d"`` en otro caso.
- GaussRat: ``"a"``, ``"bi"``, ``"a+bi"``, ``"a-bi"``; el coeficiente 1 se omite
  (``"1-i"``) y un coeficiente fraccionario afecta a la unidad completa
  (``"1/2i"`` es (1/2)·i).
- Surd2: ``"a"``, ``"b√2"``, ``"a+b√2"`` (orden canónico); ``surd_first_str`` escribe
  primero el término en √2 cuando la parte entera es negativa (``"2√2-3"``).
Los parsers aceptan además el signo tipográfico ``−`` y ``sqrt2`` por ``√2``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from config.settings import settings


class ErrorDesbordamiento(OverflowError):
    """Un entero intermedio salió del rango verificado."""


class ErrorFormato(ValueError):
    """Texto que no representa un valor exacto válido."""


def _verificar(n: int) -> int:
    """Devuelve n si cabe en INT_BITS bits con signo; si no, falla."""
    limite = 1 << (settings.INT_BITS - 1)
    if not -limite <= n < limite:
        raise ErrorDesbordamiento(f"Desbordamiento entero ({settings.INT_BITS} bits): {n}")
    return n


def _normalizar_signos(texto: str) -> str:
    return texto.strip().replace("−", "-").replace(" ", "").replace("sqrt2", "√2")


def _dividir_en_ultimo_signo(texto: str):
    """Separa ``"a+b"`` en ``("a", "+b")`` usando el último signo que no es inicial."""
    corte = max(texto.rfind("+"), texto.rfind("-"))
    if corte <= 0:
        return "", texto
    return texto[:corte], texto[corte:]


# ---------------------------------------------------------------------------
# Rat
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Rat:
    """Racional exacto en forma canónica: den > 0 y mcd(|num|, den) = 1."""

    num: int
    den: int = 1

    def __post_init__(self):
        num, den = int(self.num), int(self.den)
        if den == 0:
            raise ZeroDivisionError(f"Rat({num}, 0)")
        if den < 0:
            num, den = -num, -den
        g = math.gcd(num, den)
        object.__setattr__(self, "num", _verificar(num // g))
        object.__setattr__(self, "den", _verificar(den // g))

    @classmethod
    def parse(cls, texto: str) -> "Rat":
        """Convierte ``"n"`` o ``"n/d"`` en Rat."""
        limpio = _normalizar_signos(texto)
        partes = limpio.split("/")
        try:
            if len(partes) == 1:
                return cls(int(partes[0]))
            if len(partes) == 2 and partes[1].isdigit():
                return cls(int(partes[0]), int(partes[1]))
        except (ValueError, ZeroDivisionError):
            pass
        raise ErrorFormato(f"Racional inválido: {texto!r}")

    # aritmética
    def __add__(self, other):
        other = _como_rat(other)
        if other is NotImplemented:
            return NotImplemented
        return rat_add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = _como_rat(other)
        if other is NotImplemented:
            return NotImplemented
        return rat_add(self, rat_neg(other))

    def __rsub__(self, other):
        other = _como_rat(other)
        if other is NotImplemented:
            return NotImplemented
        return rat_add(other, rat_neg(self))

    def __mul__(self, other):
        other = _como_rat(other)
        if other is NotImplemented:
            return NotImplemented
        return rat_mul(self, other)

    __rmul__ = __mul__

    def __neg__(self) -> "Rat":
        return rat_neg(self)

    def __abs__(self) -> "Rat":
        return Rat(abs(self.num), self.den)

    def __bool__(self) -> bool:
        return self.num != 0

    # orden
    def __lt__(self, other) -> bool:
        other = _como_rat(other)
        return _verificar(self.num * other.den) < _verificar(other.num * self.den)

    def __le__(self, other) -> bool:
        return self == _como_rat(other) or self < other

    def __gt__(self, other) -> bool:
        return _como_rat(other) < self

    def __ge__(self, other) -> bool:
        return _como_rat(other) <= self

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Rat(other)
        if not isinstance(other, Rat):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __str__(self) -> str:
        if self.den == 1:
            return str(self.num)
        return f"{self.num}/{self.den}"


def _como_rat(valor) -> Rat:
    if isinstance(valor, Rat):
        return valor
    if isinstance(valor, int):
        return Rat(valor)
    return NotImplemented


def rat_add(x: Rat, y: Rat) -> Rat:
    izquierda = _verificar(x.num * y.den)
    derecha = _verificar(y.num * x.den)
    return Rat(_verificar(izquierda + derecha), _verificar(x.den * y.den))


def rat_mul(x: Rat, y: Rat) -> Rat:
    return Rat(_verificar(x.num * y.num), _verificar(x.den * y.den))


def rat_neg(x: Rat) -> Rat:
    return Rat(_verificar(-x.num), x.den)


ZERO = Rat(0)
ONE = Rat(1)
HALF = Rat(1, 2)


# ---------------------------------------------------------------------------
# GaussRat: Q[i]
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GaussRat:
    """Elemento re + im·i de Q[i]."""

    re: Rat
    im: Rat = ZERO

    def __post_init__(self):
        object.__setattr__(self, "re", _como_rat(self.re))
        object.__setattr__(self, "im", _como_rat(self.im))
        if self.re is NotImplemented or self.im is NotImplemented:
            raise TypeError("GaussRat requiere componentes enteras o Rat")

    @property
    def is_real(self) -> bool:
        return self.im.num == 0

    @property
    def is_imaginary(self) -> bool:
        """Puramente imaginario y distinto de cero."""
        return self.re.num == 0 and self.im.num != 0

    def norm(self) -> Rat:
        """|z|² = z·conj(z), siempre real y no negativo."""
        return g_mul(self, g_conj(self)).re

    def conj(self) -> "GaussRat":
        return g_conj(self)

    @classmethod
    def parse(cls, texto: str) -> "GaussRat":
        limpio = _normalizar_signos(texto)
        if not limpio:
            raise ErrorFormato("Valor gaussiano vacío")
        if not limpio.endswith("i"):
            return cls(Rat.parse(limpio))
        real, coeficiente = _dividir_en_ultimo_signo(limpio[:-1])
        if coeficiente in ("", "+"):
            imag = ONE
        elif coeficiente == "-":
            imag = -ONE
        else:
            imag = Rat.parse(coeficiente)
        return cls(Rat.parse(real) if real else ZERO, imag)

    def __add__(self, other):
        other = _como_gauss(other)
        if other is NotImplemented:
            return NotImplemented
        return g_add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = _como_gauss(other)
        if other is NotImplemented:
            return NotImplemented
        return g_add(self, -other)

    def __mul__(self, other):
        other = _como_gauss(other)
        if other is NotImplemented:
            return NotImplemented
        return g_mul(self, other)

    __rmul__ = __mul__

    def __neg__(self) -> "GaussRat":
        return GaussRat(-self.re, -self.im)

    def __str__(self) -> str:
        if self.is_real:
            return str(self.re)
        coeficiente = "" if abs(self.im) == ONE else str(abs(self.im))
        imaginaria = f"{coeficiente}i"
        if self.re.num == 0:
            return f"-{imaginaria}" if self.im.num < 0 else imaginaria
        signo = "-" if self.im.num < 0 else "+"
        return f"{self.re}{signo}{imaginaria}"


def _como_gauss(valor) -> GaussRat:
    if isinstance(valor, GaussRat):
        return valor
    if isinstance(valor, (int, Rat)):
        return GaussRat(valor)
    return NotImplemented


def g_add(x: GaussRat, y: GaussRat) -> GaussRat:
    return GaussRat(rat_add(x.re, y.re), rat_add(x.im, y.im))


def g_mul(x: GaussRat, y: GaussRat) -> GaussRat:
    re = rat_add(rat_mul(x.re, y.re), rat_neg(rat_mul(x.im, y.im)))
    im = rat_add(rat_mul(x.re, y.im), rat_mul(x.im, y.re))
    return GaussRat(re, im)


def g_conj(x: GaussRat) -> GaussRat:
    return GaussRat(x.re, rat_neg(x.im))


I = GaussRat(ZERO, ONE)


# ---------------------------------------------------------------------------
# Surd2: Z[√2]
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Surd2:
    """Elemento a + b·√2 de Z[√2], con a y b enteros."""

    a: int
    b: int = 0

    def __post_init__(self):
        if isinstance(self.a, bool) or isinstance(self.b, bool):
            raise TypeError("Surd2 requiere coeficientes enteros")
        object.__setattr__(self, "a", _verificar(int(self.a)))
        object.__setattr__(self, "b", _verificar(int(self.b)))

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def norm(self) -> int:
        """a² - 2b² = s·conj(s)."""
        return s_mul(self, s_conj(self)).a

    def conj(self) -> "Surd2":
        return s_conj(self)

    @classmethod
    def parse(cls, texto: str) -> "Surd2":
        limpio = _normalizar_signos(texto)
        try:
            if "√2" not in limpio:
                return cls(int(limpio))
            if limpio.endswith("√2"):
                entero, irracional = _dividir_en_ultimo_signo(limpio[:-2])
            else:
                # estilo "2√2-3": el término en √2 va primero
                corte = limpio.index("√2") + 2
                irracional, entero = limpio[:corte - 2], limpio[corte:]
            if irracional in ("", "+"):
                b = 1
            elif irracional == "-":
                b = -1
            else:
                b = int(irracional)
            return cls(int(entero) if entero else 0, b)
        except ValueError as e:
            raise ErrorFormato(f"Valor de Z[√2] inválido: {texto!r}") from e

    def __add__(self, other):
        other = _como_surd(other)
        if other is NotImplemented:
            return NotImplemented
        return s_add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = _como_surd(other)
        if other is NotImplemented:
            return NotImplemented
        return s_add(self, -other)

    def __mul__(self, other):
        other = _como_surd(other)
        if other is NotImplemented:
            return NotImplemented
        return s_mul(self, other)

    __rmul__ = __mul__

    def __neg__(self) -> "Surd2":
        return Surd2(-self.a, -self.b)

    def _termino_irracional(self) -> str:
        coeficiente = "" if abs(self.b) == 1 else str(abs(self.b))
        return f"{coeficiente}√2"

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return f"-{self._termino_irracional()}" if self.b < 0 else self._termino_irracional()
        signo = "-" if self.b < 0 else "+"
        return f"{self.a}{signo}{self._termino_irracional()}"

    def surd_first_str(self) -> str:
        """Como ``str`` pero con el término en √2 delante si a < 0 < b: ``"2√2-3"``."""
        if self.a < 0 < self.b:
            return f"{self._termino_irracional()}{self.a}"
        return str(self)


def _como_surd(valor) -> Surd2:
    if isinstance(valor, Surd2):
        return valor
    if isinstance(valor, int):
        return Surd2(valor)
    return NotImplemented


def s_add(x: Surd2, y: Surd2) -> Surd2:
    return Surd2(_verificar(x.a + y.a), _verificar(x.b + y.b))


def s_mul(x: Surd2, y: Surd2) -> Surd2:
    a = _verificar(_verificar(x.a * y.a) + _verificar(2 * _verificar(x.b * y.b)))
    b = _verificar(_verificar(x.a * y.b) + _verificar(x.b * y.a))
    return Surd2(a, b)


def s_conj(x: Surd2) -> Surd2:
    return Surd2(x.a, _verificar(-x.b))


SQRT2 = Surd2(0, 1)
