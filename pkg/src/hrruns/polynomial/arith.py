"""Dense exact polynomials over the integers.

Coefficients are stored lowest degree first; the zero polynomial has no
coefficients.  Rational evaluation uses :class:`fractions.Fraction`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Iterable

from ..errors import BasisError, DivisibilityError, DomainError

Rational = Fraction


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = [int(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class IntPoly:
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    @classmethod
    def x(cls, k: int = 1, c: int = 1) -> IntPoly:
        return cls((0,) * k + (c,))

    @classmethod
    def const(cls, c: int) -> IntPoly:
        return cls((c,))

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[int, int, int]]) -> IntPoly:
        """Sum of ``c * x^a * (1+x)^b`` over ``(c, a, b)`` triples, ``b >= 0``."""
        total = cls()
        for c, a, b in terms:
            total = total + basis_element(a, b) * c
        return total

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def low_degree(self) -> int:
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return -1

    def __add__(self, other):
        other = _lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(tuple(self.coeff(k) + other.coeff(k) for k in range(n)))

    __radd__ = __add__

    def __neg__(self):
        return IntPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-_lift(other))

    def __rsub__(self, other):
        return _lift(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly(tuple(c * other for c in self.coeffs))
        other = _lift(other)
        if self.is_zero() or other.is_zero():
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise DomainError("negative power")
        result, base = IntPoly((1,)), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shift(self, k: int) -> IntPoly:
        """Multiply by x^k; negative k divides and requires the low terms to vanish."""
        if k >= 0:
            return IntPoly((0,) * k + self.coeffs)
        if any(self.coeffs[:-k]):
            raise DivisibilityError(f"{self} is not divisible by x^{-k}")
        return IntPoly(self.coeffs[-k:])

    def __call__(self, x):
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if mono and c == 1:
                parts.append(mono)
            elif mono and c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def to_json_obj(self) -> list:
        return list(self.coeffs)


def _lift(p) -> IntPoly:
    if isinstance(p, IntPoly):
        return p
    if isinstance(p, int):
        return IntPoly((p,))
    raise TypeError(f"cannot combine IntPoly with {type(p).__name__}")


ONE = IntPoly((1,))
X = IntPoly((0, 1))
ONE_PLUS_X = IntPoly((1, 1))


def basis_element(a: int, b: int) -> IntPoly:
    """``x^a (1+x)^b``."""
    if a < 0 or b < 0:
        raise BasisError(f"x^{a}(1+x)^{b} is not a polynomial")
    return IntPoly((0,) * a + tuple(comb(b, j) for j in range(b + 1)))


def poly_div_exact(p: IntPoly, q: IntPoly) -> IntPoly:
    """Quotient ``r`` with ``p == q * r``; raises when the division leaves a remainder."""
    if q.is_zero():
        raise DomainError("division by the zero polynomial")
    rem = list(p.coeffs)
    dq = q.degree
    lead = q.coeffs[-1]
    if len(rem) <= dq:
        if p.is_zero():
            return IntPoly()
        raise DivisibilityError(f"{q} does not divide {p}")
    quot = [0] * (len(rem) - dq)
    for k in range(len(quot) - 1, -1, -1):
        c = rem[k + dq]
        if c % lead:
            raise DivisibilityError(f"{q} does not divide {p} over the integers")
        c //= lead
        quot[k] = c
        if c:
            for j, b in enumerate(q.coeffs):
                rem[k + j] -= c * b
    if any(rem):
        raise DivisibilityError(f"{q} does not divide {p}: remainder {IntPoly(rem)}")
    return IntPoly(quot)


def multiplicity_at_minus_one(p: IntPoly) -> int:
    if p.is_zero():
        raise DomainError("the zero polynomial has every root")
    e = 0
    while p(-1) == 0:
        p = poly_div_exact(p, ONE_PLUS_X)
        e += 1
    return e


def poly_eval_rational(p: IntPoly, x) -> Fraction:
    return Fraction(p(Fraction(x)))


@dataclass(frozen=True)
class GammaDecomposition:
    """``P = sum_k c_k x^k (1+x)^(m - s k)`` with ``s = 1`` (peeled) or ``s = 2`` (gamma)."""
    m: int
    coeffs: dict = field(default_factory=dict)
    kind: str = "peeled"

    @property
    def step(self) -> int:
        return 1 if self.kind == "peeled" else 2

    def coefficient(self, k: int) -> int:
        return self.coeffs.get(k, 0)

    def as_tuple(self, length: int | None = None) -> tuple[int, ...]:
        if length is None:
            length = max(self.coeffs, default=-1) + 1
        return tuple(self.coefficient(k) for k in range(length))

    def reconstruct(self) -> IntPoly:
        return IntPoly.from_terms((c, k, self.m - self.step * k) for k, c in self.coeffs.items() if c)

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs.values())

    def to_tex(self) -> str:
        terms = []
        for k in sorted(self.coeffs):
            c = self.coeffs[k]
            if not c:
                continue
            b = self.m - self.step * k
            xs = "" if k == 0 else ("x" if k == 1 else f"x^{{{k}}}")
            ys = "" if b == 0 else ("(1+x)" if b == 1 else f"(1+x)^{{{b}}}")
            body = xs + ys or "1"
            terms.append(body if c == 1 else f"{c}{body}")
        return " + ".join(terms) if terms else "0"


def basis_decompose(p: IntPoly, m: int, kind: str = "peeled") -> GammaDecomposition:
    """Coordinates of ``p`` in ``{x^k (1+x)^(m-k)}`` (peeled) or ``{x^k (1+x)^(m-2k)}`` (gamma).

    Both bases are triangular with unit diagonal, so the coefficient of
    ``x^j`` fixes ``c_j`` once ``c_0..c_(j-1)`` are known.  The gamma basis
    only spans polynomials symmetric about degree m/2; anything else is
    rejected after reconstruction.
    """
    if kind not in ("peeled", "gamma"):
        raise BasisError(f"unknown basis kind {kind!r}")
    if p.degree > m:
        raise BasisError(f"degree {p.degree} exceeds basis parameter {m}")
    step = 1 if kind == "peeled" else 2
    top = m if kind == "peeled" else m // 2
    c: dict[int, int] = {}
    for j in range(top + 1):
        c[j] = p.coeff(j) - sum(c[k] * comb(m - step * k, j - k) for k in range(j))
    dec = GammaDecomposition(m, {k: v for k, v in c.items() if v}, kind)
    if dec.reconstruct() != p:
        raise BasisError(f"{p} has no expansion in the {kind} basis with m={m}")
    return dec
