"""Exact polynomials in the field-size parameter q.

Coefficients are rational integers, or elements a + b*sqrt(d) of Z[sqrt(d)]
(d = 2 or 3) for the Suzuki and Ree types, where q itself is an odd power
of sqrt(d).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union


@dataclass(frozen=True)
class QuadraticNumber:
    """An element a + b*sqrt(d) of Q(sqrt(d)), d squarefree and > 1."""

    a: Fraction
    b: Fraction
    d: int

    @classmethod
    def of(cls, a, b=0, d: int = 2) -> "QuadraticNumber":
        return cls(Fraction(a), Fraction(b), d)

    def _coerce(self, other) -> "QuadraticNumber":
        if isinstance(other, QuadraticNumber):
            if other.d != self.d:
                raise ValueError(f"mixing Q(sqrt{self.d}) and Q(sqrt{other.d})")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadraticNumber(Fraction(other), Fraction(0), self.d)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadraticNumber(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticNumber(-self.a, -self.b, self.d)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadraticNumber(
            self.a * o.a + self.d * self.b * o.b, self.a * o.b + self.b * o.a, self.d
        )

    __rmul__ = __mul__

    def conjugate(self) -> "QuadraticNumber":
        return QuadraticNumber(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.d * self.b * self.b

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt d)")
        num = self * o.conjugate()
        return QuadraticNumber(num.a / n, num.b / n, self.d)

    def __eq__(self, other):
        if isinstance(other, QuadraticNumber):
            return (self.a, self.b, self.d) == (other.a, other.b, other.d)
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        return hash((self.a, self.b, self.d))

    def is_integral(self) -> bool:
        return self.a.denominator == 1 and self.b.denominator == 1

    def is_rational(self) -> bool:
        return self.b == 0

    def __str__(self) -> str:
        return _format_quadratic(self.a, self.b, self.d)


def _format_quadratic(a, b, d: int) -> str:
    if b == 0:
        return str(a)
    rad = f"√{d}" if abs(b) == 1 else f"{abs(b)}√{d}"
    if a == 0:
        return rad if b > 0 else f"-{rad}"
    return f"{a}{'+' if b > 0 else '-'}{rad}"


Coefficient = Union[int, QuadraticNumber]


def _as_pair(c, radicand: int) -> tuple[int, int]:
    if isinstance(c, QuadraticNumber):
        if c.d != radicand:
            raise ValueError(f"coefficient in Q(sqrt{c.d}) but polynomial over Z[sqrt{radicand}]")
        if not c.is_integral():
            raise ValueError(f"coefficient {c} is not an algebraic integer of the stated form")
        return int(c.a), int(c.b)
    if isinstance(c, tuple):
        return int(c[0]), int(c[1])
    f = Fraction(c)
    if f.denominator != 1:
        raise ValueError(f"coefficient {c} is not an integer")
    return int(f), 0


@dataclass(frozen=True)
class IntPolynomial:
    """Polynomial in q with coefficients in Z, or in Z[sqrt(radicand)].

    ``coeffs`` is stored low degree first; for radicand > 1 each coefficient is
    an integer pair (a, b) meaning a + b*sqrt(radicand).  Trailing zeros are
    stripped so the zero polynomial has ``coeffs == ()``.
    """

    coeffs: tuple
    radicand: int = 1

    def __post_init__(self):
        if self.radicand == 1:
            cs = [int(_as_pair(c, 1)[0]) if not isinstance(c, int) else c for c in self.coeffs]
            zero = 0
        else:
            cs = [_as_pair(c, self.radicand) for c in self.coeffs]
            zero = (0, 0)
        while cs and cs[-1] == zero:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    # construction helpers
    @classmethod
    def from_coefficients(cls, coeffs: Iterable, radicand: int = 1) -> "IntPolynomial":
        return cls(tuple(coeffs), radicand)

    @classmethod
    def x(cls) -> "IntPolynomial":
        return cls((0, 1))

    @classmethod
    def constant(cls, c: int) -> "IntPolynomial":
        return cls((c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self):
        if not self.coeffs:
            return 0
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return self.leading in (1, (1, 0))

    def _ring_coeffs(self) -> list:
        if self.radicand == 1:
            return list(self.coeffs)
        return [QuadraticNumber.of(a, b, self.radicand) for a, b in self.coeffs]

    @classmethod
    def _from_ring(cls, cs: Sequence, radicand: int) -> "IntPolynomial":
        return cls(tuple(cs), radicand)

    def _check(self, other: "IntPolynomial") -> int:
        if isinstance(other, int):
            other = IntPolynomial.constant(other)
        if self.radicand == other.radicand or other.radicand == 1:
            return self.radicand
        if self.radicand == 1:
            return other.radicand
        raise ValueError("polynomials over different quadratic rings")

    def _lift(self, radicand: int) -> list:
        cs = self._ring_coeffs()
        if radicand == 1 or self.radicand == radicand:
            return cs
        return [QuadraticNumber.of(c, 0, radicand) for c in cs]

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPolynomial.constant(other)
        r = self._check(other)
        a, b = self._lift(r), other._lift(r)
        n = max(len(a), len(b))
        a += [0] * (n - len(a))
        b += [0] * (n - len(b))
        return IntPolynomial._from_ring([x + y for x, y in zip(a, b)], r)

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial._from_ring([-c for c in self._ring_coeffs()], self.radicand)

    def __sub__(self, other):
        if isinstance(other, int):
            other = IntPolynomial.constant(other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            other = IntPolynomial.constant(other)
        r = self._check(other)
        a, b = self._lift(r), other._lift(r)
        if not a or not b:
            return IntPolynomial((), r)
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
        return IntPolynomial._from_ring(out, r)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = IntPolynomial((1,), self.radicand)
        for _ in range(k):
            result = result * self
        return result

    def divmod(self, divisor: "IntPolynomial") -> tuple["IntPolynomial", "IntPolynomial"]:
        """Euclidean division by a monic polynomial (exact over the coefficient ring)."""
        if not divisor.is_monic():
            raise ValueError("divisor must be monic")
        r = self._check(divisor)
        rem = self._lift(r)
        dv = divisor._lift(r)
        dd = len(dv) - 1
        if len(rem) - 1 < dd:
            return IntPolynomial((), r), self
        quot = [0] * (len(rem) - dd)
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k]
            quot[k - dd] = c
            if c == 0:
                continue
            for j in range(dd + 1):
                rem[k - dd + j] = rem[k - dd + j] - c * dv[j]
        return IntPolynomial._from_ring(quot, r), IntPolynomial._from_ring(rem[:dd], r)

    def divides(self, other: "IntPolynomial") -> bool:
        return not other.divmod(self)[1].coeffs

    def __call__(self, value):
        """Horner evaluation at an int, Fraction or QuadraticNumber."""
        acc = 0
        for c in reversed(self._ring_coeffs()):
            acc = acc * value + c
        return acc

    def to_json(self) -> dict:
        if self.radicand == 1:
            return {"coefficients": list(self.coeffs)}
        return {"coefficients": [list(c) for c in self.coeffs], "radicand": self.radicand}

    @classmethod
    def from_json(cls, payload: dict) -> "IntPolynomial":
        r = payload.get("radicand", 1)
        cs = payload["coefficients"]
        return cls(tuple(tuple(c) if r != 1 else c for c in cs), r)

    def __str__(self) -> str:
        return self.format("q")

    def format(self, var: str = "q") -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c in (0, (0, 0)):
                continue
            mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            if self.radicand == 1:
                sign = "-" if c < 0 else "+"
                mag = abs(c)
                body = str(mag) if (mag != 1 or not mono) else ""
            else:
                a, b = c
                if a == 0 or b == 0:
                    sign = "-" if (a < 0 or b < 0) else "+"
                    body = _format_quadratic(abs(a), abs(b), self.radicand)
                    if body == "1" and mono:
                        body = ""
                else:
                    sign = "+"
                    body = f"({_format_quadratic(a, b, self.radicand)})"
            terms.append((sign, body + mono))
        out = ""
        for i, (sign, body) in enumerate(terms):
            if i == 0:
                out = ("-" if sign == "-" else "") + body
            else:
                out += f" {sign} {body}"
        return out


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> IntPolynomial:
    """The n-th cyclotomic polynomial over Z."""
    if n < 1:
        raise ValueError("cyclotomic index must be positive")
    poly = IntPolynomial((-1,) + (0,) * (n - 1) + (1,))
    for d in range(1, n):
        if n % d == 0:
            poly, rem = poly.divmod(cyclotomic(d))
            assert not rem.coeffs
    return poly


def charpoly(matrix: Sequence[Sequence], one=1) -> list:
    """Characteristic polynomial det(xI - M), low degree first (Faddeev-LeVerrier).

    Works over any field of characteristic zero whose elements support +, *
    and division by integers; integer input is handled through Fraction.
    """
    n = len(matrix)
    M = [[Fraction(x) if isinstance(x, int) else x for x in row] for row in matrix]
    zero = one * 0

    def matmul(A, B):
        return [[sum((A[i][k] * B[k][j] for k in range(n)), zero) for j in range(n)] for i in range(n)]

    coeffs = [zero] * (n + 1)
    coeffs[n] = one
    Mk = [[zero] * n for _ in range(n)]
    c_prev = one
    for k in range(1, n + 1):
        # M_k = M (M_{k-1} + c_{n-k+1} I)
        inner = [[Mk[i][j] + (c_prev if i == j else zero) for j in range(n)] for i in range(n)]
        Mk = matmul(M, inner)
        trace = sum((Mk[i][i] for i in range(n)), zero)
        c = -trace / k
        coeffs[n - k] = c
        c_prev = c
    return coeffs
