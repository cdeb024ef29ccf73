"""Exact univariate polynomials over the integers.

Everything in the verification path is integer (or ``Fraction``) arithmetic;
there is no floating point here.  Coefficients are stored in ascending order,
so ``IntPoly((5, -5, 1))`` is ``q^2 - 5*q + 5``.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, Union

from .errors import (
    DivisionByZero,
    NonExactDivision,
    NotPalindromic,
    OddDegree,
    ZeroPolynomial,
)

__all__ = [
    "IntPoly",
    "GoldenInt",
    "PHI",
    "Q",
    "falling_factorial",
    "exact_div",
    "is_divisible",
    "pseudo_remainder",
    "poly_gcd",
    "square_free_part",
    "eval_golden",
    "cyclotomic",
    "half_palindromic_decompose",
    "shift_poly",
    "sturm_chain",
    "sturm_count",
    "sign_at",
]

DEGREE_OF_ZERO = -math.inf


class IntPoly:
    """Dense integer polynomial; immutable and hashable."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self._coeffs = tuple(c)

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    @classmethod
    def constant(cls, c: int) -> IntPoly:
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> IntPoly:
        return cls((0,) * k + (c,))

    @classmethod
    def from_roots(cls, roots: Iterable[int]) -> IntPoly:
        return reduce(lambda acc, r: acc * cls((-r, 1)), roots, cls((1,)))

    @classmethod
    def parse(cls, text: str) -> IntPoly:
        """Inverse of :meth:`to_machine` (ascending, space separated)."""
        return cls(int(tok) for tok in text.split())

    @property
    def degree(self) -> int | float:
        return len(self._coeffs) - 1 if self._coeffs else DEGREE_OF_ZERO

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def lc(self) -> int:
        return self._coeffs[-1] if self._coeffs else 0

    def is_monic(self) -> bool:
        return self.lc == 1

    def __getitem__(self, i: int) -> int:
        return self._coeffs[i] if 0 <= i < len(self._coeffs) else 0

    def __len__(self) -> int:
        return len(self._coeffs)

    def __iter__(self):
        return iter(self._coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, IntPoly):
            return self._coeffs == other._coeffs
        if isinstance(other, int):
            return self._coeffs == IntPoly((other,))._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("IntPoly", self._coeffs))

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({list(self._coeffs)})"

    def __str__(self) -> str:
        return self.pretty()

    @staticmethod
    def _coerce(other) -> IntPoly | None:
        if isinstance(other, IntPoly):
            return other
        if isinstance(other, int):
            return IntPoly((other,))
        return None

    def __add__(self, other) -> IntPoly:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._coeffs, o._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] += x
        return IntPoly(out)

    __radd__ = __add__

    def __neg__(self) -> IntPoly:
        return IntPoly(-x for x in self._coeffs)

    def __sub__(self, other) -> IntPoly:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> IntPoly:
        return (-self) + other

    def __mul__(self, other) -> IntPoly:
        if isinstance(other, int):
            return IntPoly(x * other for x in self._coeffs)
        if not isinstance(other, IntPoly):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> IntPoly:
        if k < 0:
            raise ValueError("negative exponent")
        result, base = IntPoly((1,)), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __floordiv__(self, other) -> IntPoly:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return exact_div(self, o)

    def __call__(self, x):
        """Horner evaluation; works for anything supporting ``*`` and ``+`` with ints."""
        if not self._coeffs:
            return 0
        acc = self._coeffs[-1]
        for c in reversed(self._coeffs[:-1]):
            acc = acc * x + c
        return acc

    def derivative(self) -> IntPoly:
        return IntPoly(i * c for i, c in enumerate(self._coeffs) if i)

    def content(self) -> int:
        return reduce(math.gcd, self._coeffs, 0)

    def primitive_part(self) -> IntPoly:
        """Divide out the content and normalise to a positive leading coefficient."""
        if not self._coeffs:
            return self
        g = self.content()
        if self.lc < 0:
            g = -g
        return IntPoly(c // g for c in self._coeffs)

    def reversed(self) -> IntPoly:
        return IntPoly(reversed(self._coeffs))

    def to_machine(self) -> str:
        return " ".join(str(c) for c in self._coeffs) if self._coeffs else "0"

    def pretty(self, var: str = "q") -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for k in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)


Q = IntPoly((0, 1))


def falling_factorial(n: int) -> IntPoly:
    """q(q-1)...(q-n+1); the chromatic polynomial of K_n."""
    if n < 0:
        raise ValueError("falling_factorial needs n >= 0")
    return IntPoly.from_roots(range(n))


def _long_division(p: IntPoly, d: IntPoly) -> tuple[list[int], list[int]]:
    if d.is_zero:
        raise DivisionByZero("polynomial division by zero")
    rem = list(p.coeffs)
    dc = d.coeffs
    dd = len(dc) - 1
    lc = dc[-1]
    quot = [0] * max(len(rem) - dd, 0)
    for k in range(len(rem) - 1 - dd, -1, -1):
        top = rem[k + dd]
        if top == 0:
            continue
        f, r = divmod(top, lc)
        if r:
            raise NonExactDivision(f"{p.pretty()} is not divisible by {d.pretty()} over Z")
        quot[k] = f
        for j, c in enumerate(dc):
            rem[k + j] -= f * c
    return quot, rem


def exact_div(p: IntPoly, d: IntPoly) -> IntPoly:
    """Return r with p == d*r, or raise NonExactDivision."""
    quot, rem = _long_division(p, d)
    if any(rem):
        raise NonExactDivision(f"{p.pretty()} is not divisible by {d.pretty()}")
    return IntPoly(quot)


def pseudo_remainder(a: IntPoly, b: IntPoly) -> IntPoly:
    """Remainder of |lc(b)|^(deg a - deg b + 1) * a by b.

    The scale factor is positive, so the result has the sign pattern of the true
    remainder over Q.
    """
    if b.is_zero:
        raise DivisionByZero("pseudo-remainder by zero")
    if a.is_zero or a.degree < b.degree:
        return a
    scale = abs(b.lc) ** (int(a.degree - b.degree) + 1)
    _, rem = _long_division(a * scale, b)
    return IntPoly(rem)


def is_divisible(p: IntPoly, d: IntPoly) -> bool:
    """True iff d divides p in Q[x]; for monic d this is the same as Z[x]."""
    if d.is_zero:
        raise DivisionByZero("divisibility test by the zero polynomial")
    return pseudo_remainder(p, d).is_zero


def poly_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Primitive gcd with positive leading coefficient (primitive PRS)."""
    if a.is_zero:
        return b.primitive_part()
    if b.is_zero:
        return a.primitive_part()
    a, b = a.primitive_part(), b.primitive_part()
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero:
        r = pseudo_remainder(a, b)
        a, b = b, r.primitive_part()
    return a


def square_free_part(p: IntPoly) -> IntPoly:
    if p.is_zero:
        raise ZeroPolynomial("square-free part of the zero polynomial")
    g = poly_gcd(p, p.derivative())
    return exact_div(p, g)


@dataclass(frozen=True)
class GoldenInt:
    """a + b*phi with phi^2 = phi + 1."""

    a: int = 0
    b: int = 0

    @staticmethod
    def _lift(x) -> GoldenInt | None:
        if isinstance(x, GoldenInt):
            return x
        if isinstance(x, int):
            return GoldenInt(x, 0)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return GoldenInt(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return GoldenInt(-self.a, -self.b)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return GoldenInt(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        a, b, c, d = self.a, self.b, o.a, o.b
        return GoldenInt(a * c + b * d, a * d + b * c + b * d)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("GoldenInt only supports non-negative powers")
        result, base = GoldenInt(1, 0), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> GoldenInt:
        # phi -> 1 - phi
        return GoldenInt(self.a + self.b, -self.b)

    def norm(self) -> int:
        return self.a * self.a + self.a * self.b - self.b * self.b

    def __float__(self) -> float:
        return self.a + self.b * (1 + math.sqrt(5)) / 2

    def __str__(self) -> str:
        return f"{self.a}{self.b:+}φ"


PHI = GoldenInt(0, 1)


def eval_golden(p: IntPoly, x: GoldenInt) -> GoldenInt:
    acc = GoldenInt()
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


_cyclotomic_cache: dict[int, IntPoly] = {}
_cyclotomic_lock = threading.Lock()


def cyclotomic(n: int) -> IntPoly:
    """n-th cyclotomic polynomial, by dividing x^n - 1 by Phi_d for proper divisors d."""
    if n < 1:
        raise ValueError("cyclotomic needs n >= 1")
    hit = _cyclotomic_cache.get(n)
    if hit is not None:
        return hit
    p = IntPoly.monomial(n) - 1
    for d in range(1, n):
        if n % d == 0:
            p = exact_div(p, cyclotomic(d))
    with _cyclotomic_lock:
        _cyclotomic_cache.setdefault(n, p)
    return p


def half_palindromic_decompose(p: IntPoly) -> IntPoly:
    """Return psi with p(x) = x^d * psi(x + 1/x), where deg p = 2d."""
    c = p.coeffs
    if c != tuple(reversed(c)):
        raise NotPalindromic(f"{p.pretty('x')} is not palindromic")
    if not c or len(c) % 2 == 0:
        raise OddDegree(f"{p.pretty('x')} does not have even degree")
    d = len(c) // 2
    y = IntPoly((0, 1))
    # x^k + x^-k as a polynomial in y = x + 1/x (Dickson / Lucas recurrence)
    lucas = [IntPoly((2,)), y]
    for _ in range(2, d + 1):
        lucas.append(y * lucas[-1] - lucas[-2])
    psi = IntPoly((c[d],))
    for k in range(1, d + 1):
        psi = psi + lucas[k] * c[d + k]
    back = sum(
        (IntPoly.monomial(d - j) * IntPoly((1, 0, 1)) ** j * coeff for j, coeff in enumerate(psi.coeffs)),
        IntPoly(),
    )
    if back != p:
        raise ArithmeticError("palindromic back-substitution failed")
    return psi


def shift_poly(p: IntPoly, c: int) -> IntPoly:
    """p(x - c), expanded exactly."""
    lin = IntPoly((-c, 1))
    acc = IntPoly()
    for coeff in reversed(p.coeffs):
        acc = acc * lin + coeff
    return acc


Point = Union[int, Fraction, float]


def sign_at(p: IntPoly, x: Point) -> int:
    """Exact sign of p at a rational point or at +-inf."""
    if p.is_zero:
        return 0
    if isinstance(x, float):
        if math.isinf(x):
            s = 1 if p.lc > 0 else -1
            if x < 0 and int(p.degree) % 2:
                s = -s
            return s
        x = Fraction(x)
    x = Fraction(x)
    num, den = x.numerator, x.denominator
    deg = int(p.degree)
    total = sum(c * num**i * den ** (deg - i) for i, c in enumerate(p.coeffs))
    return (total > 0) - (total < 0)


def sturm_chain(p: IntPoly) -> list[IntPoly]:
    """Sturm sequence of the square-free part of p, using sign-preserving integer remainders."""
    if p.is_zero:
        raise ZeroPolynomial("Sturm chain of the zero polynomial")
    f = square_free_part(p).primitive_part()
    chain = [f]
    df = f.derivative()
    if df.is_zero:
        return chain
    chain.append(df.primitive_part())
    while chain[-1].degree > 0:
        r = pseudo_remainder(chain[-2], chain[-1])
        if r.is_zero:
            break
        g = r.content()
        chain.append(IntPoly(-x // g for x in r.coeffs))
    return chain


def _variations(chain: list[IntPoly], x: Point) -> int:
    signs = [s for s in (sign_at(f, x) for f in chain) if s]
    return sum(1 for u, v in zip(signs, signs[1:]) if u != v)


def sturm_count(
    p: IntPoly,
    lo: Point = -math.inf,
    hi: Point = math.inf,
    include_lo: bool = False,
    include_hi: bool = False,
) -> int:
    """Number of distinct real roots of p in the interval between lo and hi.

    Infinite endpoints are passed as ``math.inf`` / ``-math.inf``; their
    inclusion flags are ignored.
    """
    if p.is_zero:
        raise ZeroPolynomial("cannot count roots of the zero polynomial")
    if not lo < hi:
        raise ValueError("sturm_count needs lo < hi")
    chain = sturm_chain(p)
    f = chain[0]
    # V(a) - V(b) counts roots in the half-open interval (a, b]
    count = _variations(chain, lo) - _variations(chain, hi)
    hi_finite = not (isinstance(hi, float) and math.isinf(hi))
    lo_finite = not (isinstance(lo, float) and math.isinf(lo))
    if hi_finite and sign_at(f, hi) == 0 and not include_hi:
        count -= 1
    if lo_finite and include_lo and sign_at(f, lo) == 0:
        count += 1
    return count
