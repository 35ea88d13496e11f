"""Exact arithmetic over gross-numbers.

A gross-number is a finite sum of terms ``c * B**G * G**p`` where ``G`` is the
infinite unit (the number of elements of the set of natural numbers), ``c`` is
a nonzero rational, ``B`` a positive rational exponential base (``B == 1``
means the exponential factor is absent) and ``p`` a rational power.  Terms are
kept in canonical form: unique ``(base, gpow)`` keys, strictly descending, no
zero coefficients.  A larger base always dominates (exponential growth beats
any power of G); for equal bases the larger power of G dominates.

Everything here is immutable and every operation is a pure function, so values
can be shared freely across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Tuple, Union

from .errors import (
    BaseRootUnsupported,
    CoefficientNotPerfectPower,
    DivisionByZero,
    ExponentNotLinearInGrossone,
    FractionalGrossPower,
    NegativePowerOfSum,
    NotAGrossInteger,
    NotAMonomial,
    NotExactlyDivisible,
    ZeroToZero,
)

Rational = Fraction
RationalLike = Union[int, Fraction]

_ONE = Fraction(1)
_ZERO = Fraction(0)
_FINITE_KEY = (_ONE, _ZERO)


class NumberClass(Enum):
    ZERO = "zero"
    INFINITESIMAL = "infinitesimal"
    FINITE_PURE = "finite"
    FINITE_WITH_INFINITESIMAL_PART = "finite-with-infinitesimal"
    INFINITE = "infinite"


class Parity(Enum):
    EVEN = "even"
    ODD = "odd"


@dataclass(frozen=True)
class GrossTerm:
    """One canonical summand ``coeff * base**G * G**gpow``."""

    coeff: Fraction
    base: Fraction
    gpow: Fraction

    @property
    def key(self) -> Tuple[Fraction, Fraction]:
        return (self.base, self.gpow)


def term(coeff: RationalLike, base: RationalLike = 1, gpow: RationalLike = 0) -> GrossTerm:
    """Build a term, coercing arguments to exact rationals."""
    b = Fraction(base)
    if b <= 0:
        raise ValueError("exponential base must be positive")
    return GrossTerm(Fraction(coeff), b, Fraction(gpow))


@dataclass(frozen=True, eq=False)
class GrossNumber:
    """Canonical finite sum of :class:`GrossTerm`; the empty sum is zero."""

    terms: Tuple[GrossTerm, ...]

    # -- construction and coercion ------------------------------------

    @staticmethod
    def from_rational(value: RationalLike) -> "GrossNumber":
        c = Fraction(value)
        if c == 0:
            return ZERO
        return GrossNumber((GrossTerm(c, _ONE, _ZERO),))

    def _coerce(self, other) -> "GrossNumber":
        if isinstance(other, GrossNumber):
            return other
        if isinstance(other, (int, Fraction)):
            return GrossNumber.from_rational(other)
        return NotImplemented

    # -- ring structure -------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return normalize(self.terms + other.terms)

    __radd__ = __add__

    def __neg__(self) -> "GrossNumber":
        return GrossNumber(tuple(GrossTerm(-t.coeff, t.base, t.gpow) for t in self.terms))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        raw = [
            GrossTerm(a.coeff * b.coeff, a.base * b.base, a.gpow + b.gpow)
            for a in self.terms
            for b in other.terms
        ]
        return normalize(raw)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return div_exact(self, other)

    def __rtruediv__(self, other):
        return div_exact(GrossNumber.from_rational(other), self)

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return pow_int(self, k)

    # -- order ------------------------------------------------------------

    def sign(self) -> int:
        if not self.terms:
            return 0
        return 1 if self.terms[0].coeff > 0 else -1

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.terms == other.terms

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash(self.terms)

    def __lt__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return (self - other).sign() < 0

    def __le__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return (self - other).sign() <= 0

    def __gt__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return (self - other).sign() > 0

    def __ge__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return (self - other).sign() >= 0

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- structure queries ---------------------------------------------

    def classify(self) -> NumberClass:
        if not self.terms:
            return NumberClass.ZERO
        lead = self.terms[0].key
        if lead > _FINITE_KEY:
            return NumberClass.INFINITE
        if lead == _FINITE_KEY:
            if len(self.terms) > 1:
                return NumberClass.FINITE_WITH_INFINITESIMAL_PART
            return NumberClass.FINITE_PURE
        return NumberClass.INFINITESIMAL

    def infinite_part(self) -> "GrossNumber":
        return GrossNumber(tuple(t for t in self.terms if t.key > _FINITE_KEY))

    def finite_part(self) -> "GrossNumber":
        return GrossNumber(tuple(t for t in self.terms if t.key == _FINITE_KEY))

    def infinitesimal_part(self) -> "GrossNumber":
        return GrossNumber(tuple(t for t in self.terms if t.key < _FINITE_KEY))

    def is_gross_integer(self) -> bool:
        """Whether this value denotes an integer under the divisibility axiom.

        Requires base 1 and nonnegative integer G-powers everywhere; the
        constant term must have an integer coefficient.  Non-constant terms
        may carry any rational coefficient because G is divisible by every
        finite positive integer.
        """
        for t in self.terms:
            if t.base != 1:
                return False
            if t.gpow.denominator != 1 or t.gpow < 0:
                return False
            if t.gpow == 0 and t.coeff.denominator != 1:
                return False
        return True

    def constant_coeff(self) -> Fraction:
        for t in self.terms:
            if t.key == _FINITE_KEY:
                return t.coeff
        return _ZERO

    def parity(self) -> Parity:
        if not self.is_gross_integer():
            raise NotAGrossInteger(f"{self} is not a gross-integer")
        # G is a multiple of every finite 2n, so every non-constant term is
        # even; only the constant decides.
        c = int(self.constant_coeff())
        return Parity.EVEN if c % 2 == 0 else Parity.ODD

    def as_rational(self) -> Fraction:
        """The exact rational value of a finite pure number."""
        if not self.terms:
            return _ZERO
        if len(self.terms) == 1 and self.terms[0].key == _FINITE_KEY:
            return self.terms[0].coeff
        raise ValueError(f"{self} is not a finite pure rational")

    def eval_at(self, t: int) -> Fraction:
        """Substitute the finite integer ``t`` for G and evaluate exactly."""
        if t <= 0:
            raise ValueError("substitution point must be a positive integer")
        total = _ZERO
        for trm in self.terms:
            if trm.gpow.denominator != 1:
                raise FractionalGrossPower(f"G^({trm.gpow}) cannot be evaluated")
            total += trm.coeff * trm.base ** t * Fraction(t) ** int(trm.gpow)
        return total

    # -- rendering --------------------------------------------------------

    def __str__(self) -> str:
        return format_number(self)

    def __repr__(self) -> str:
        return f"GrossNumber({str(self)!r})"


ZERO = GrossNumber(())
ONE = GrossNumber((GrossTerm(_ONE, _ONE, _ZERO),))
GROSSONE = GrossNumber((GrossTerm(_ONE, _ONE, _ONE),))
G = GROSSONE


def gnum(value: RationalLike) -> GrossNumber:
    """Shorthand for :meth:`GrossNumber.from_rational`."""
    return GrossNumber.from_rational(value)


def normalize(raw: Iterable[GrossTerm]) -> GrossNumber:
    """Merge equal keys, drop zero coefficients, sort descending; idempotent."""
    merged: dict = {}
    for t in raw:
        k = t.key
        merged[k] = merged.get(k, _ZERO) + t.coeff
    terms = tuple(
        GrossTerm(merged[k], k[0], k[1])
        for k in sorted(merged, reverse=True)
        if merged[k] != 0
    )
    return GrossNumber(terms)


# -- free functions mirroring the methods ------------------------------------

def add(a: GrossNumber, b: GrossNumber) -> GrossNumber:
    return a + b


def neg(a: GrossNumber) -> GrossNumber:
    return -a


def mul(a: GrossNumber, b: GrossNumber) -> GrossNumber:
    return a * b


def sign(a: GrossNumber) -> int:
    return a.sign()


def compare(a: GrossNumber, b) -> int:
    """-1, 0 or +1 as ``a`` is less than, equal to, or greater than ``b``."""
    if not isinstance(b, GrossNumber):
        b = GrossNumber.from_rational(b)
    return (a - b).sign()


def classify(a: GrossNumber) -> NumberClass:
    return a.classify()


def finite_part(a: GrossNumber) -> GrossNumber:
    return a.finite_part()


def infinitesimal_part(a: GrossNumber) -> GrossNumber:
    return a.infinitesimal_part()


def infinite_part(a: GrossNumber) -> GrossNumber:
    return a.infinite_part()


def parity(x: GrossNumber) -> Parity:
    return x.parity()


def eval_at(a: GrossNumber, t: int) -> Fraction:
    return a.eval_at(t)


# -- division -----------------------------------------------------------------

def _divide_term(a: GrossTerm, b: GrossTerm) -> GrossTerm:
    return GrossTerm(a.coeff / b.coeff, a.base / b.base, a.gpow - b.gpow)


def div_exact(a: GrossNumber, b: GrossNumber) -> GrossNumber:
    """Exact quotient of gross-numbers.

    A single-term divisor divides every term directly.  Otherwise graded long
    division runs in descending key order and must leave remainder zero; the
    quotient-term bounds below make inexactness detectable in finitely many
    steps.  No approximate expansion (e.g. of ``1/(G+1)``) is ever produced.
    """
    if not b.terms:
        raise DivisionByZero("division by zero")
    if not a.terms:
        return ZERO
    if len(b.terms) == 1:
        d = b.terms[0]
        return GrossNumber(tuple(_divide_term(t, d) for t in a.terms))

    # For an exact quotient q the extreme layers of a = q*b cannot cancel,
    # so every term of q has base in [minB(a)/minB(b), maxB(a)/maxB(b)] and
    # G-power in [minP(a)-minP(b), maxP(a)-maxP(b)].  A candidate outside
    # either interval proves the division inexact.
    bases_a = [t.base for t in a.terms]
    bases_b = [t.base for t in b.terms]
    pows_a = [t.gpow for t in a.terms]
    pows_b = [t.gpow for t in b.terms]
    base_lo = min(bases_a) / min(bases_b)
    base_hi = max(bases_a) / max(bases_b)
    pow_lo = min(pows_a) - min(pows_b)
    pow_hi = max(pows_a) - max(pows_b)

    lead = b.terms[0]
    quotient: list = []
    rest = a
    while rest.terms:
        t = _divide_term(rest.terms[0], lead)
        if not (base_lo <= t.base <= base_hi and pow_lo <= t.gpow <= pow_hi):
            raise NotExactlyDivisible(f"({a}) is not exactly divisible by ({b})")
        quotient.append(t)
        rest = rest - GrossNumber((t,)) * b
    return normalize(quotient)


def pow_int(a: GrossNumber, k: int) -> GrossNumber:
    """Exact integer power; ``a**0 == 1`` for nonzero ``a``."""
    if k == 0:
        if not a.terms:
            raise ZeroToZero("0^0 is undefined")
        return ONE
    if not a.terms:
        if k < 0:
            raise DivisionByZero("zero has no negative powers")
        return ZERO
    if len(a.terms) == 1:
        t = a.terms[0]
        return GrossNumber((GrossTerm(t.coeff ** k, t.base ** k, t.gpow * k),))
    if k < 0:
        raise NegativePowerOfSum(f"({a})^{k}: negative powers need a single term")
    result = ONE
    square = a
    n = k
    while n:
        if n & 1:
            result = result * square
        n >>= 1
        if n:
            square = square * square
    return result


def linear_gross_parts(e: GrossNumber) -> Tuple[int, int]:
    """Decompose ``e = a*G + d`` with integer a, d, or reject the shape."""
    a = 0
    d = 0
    for t in e.terms:
        if t.base == 1 and t.gpow == 1 and t.coeff.denominator == 1:
            a = int(t.coeff)
        elif t.base == 1 and t.gpow == 0 and t.coeff.denominator == 1:
            d = int(t.coeff)
        else:
            raise ExponentNotLinearInGrossone(f"exponent {e} is not of the form a*G + d")
    return a, d


def exp_gross(b: RationalLike, e) -> GrossNumber:
    """Raise a rational base to a gross-integer exponent of shape ``a*G + d``.

    The result is the single term ``b**d * (b**a)**G``.  Base 0 is admitted
    only with a positive exponent, realizing the axiom ``0**G == 0``.
    """
    base = Fraction(b)
    if isinstance(e, int):
        e = GrossNumber.from_rational(e)
    a, d = linear_gross_parts(e)
    if base == 0:
        if e.sign() > 0:
            return ZERO
        if not e.terms:
            raise ZeroToZero("0^0 is undefined")
        raise DivisionByZero("zero has no negative powers")
    if base < 0:
        raise ValueError("exponential base must be nonnegative")
    coeff = base ** d
    expbase = base ** a
    if expbase == 1:
        return GrossNumber.from_rational(coeff)
    return GrossNumber((GrossTerm(coeff, expbase, _ZERO),))


def floor_div_mod(x: GrossNumber, n: int) -> Tuple[GrossNumber, int]:
    """Euclidean division of a gross-integer by a finite positive integer.

    The remainder comes from the constant term alone; every non-constant term
    is exactly divisible by ``n`` thanks to the divisibility axiom.
    """
    if n <= 0:
        raise DivisionByZero("modulus must be a positive integer")
    if not x.is_gross_integer():
        raise NotAGrossInteger(f"{x} is not a gross-integer")
    r = int(x.constant_coeff()) % n
    q = (x - r) / gnum(n)
    return q, r


def _iroot_exact(k: int, n: int):
    """Exact integer n-th root of ``k >= 0``, or None."""
    if k < 0:
        return None
    if k in (0, 1) or n == 1:
        return k
    x = 1 << ((k.bit_length() + n - 1) // n)
    while True:
        y = ((n - 1) * x + k // x ** (n - 1)) // n
        if y >= x:
            break
        x = y
    return x if x ** n == k else None


def nth_root(a: GrossNumber, n: int) -> GrossNumber:
    """Exact n-th root of a single-term number with a perfect-power coefficient."""
    if n <= 0:
        raise ValueError("root degree must be a positive integer")
    if len(a.terms) != 1:
        raise NotAMonomial(f"nth_root needs a single term, got {a}")
    t = a.terms[0]
    if n == 1:
        return a
    if t.base != 1:
        raise BaseRootUnsupported(f"cannot take a root of the factor {t.base}^G")
    num = _iroot_exact(t.coeff.numerator, n)
    den = _iroot_exact(t.coeff.denominator, n)
    if num is None or den is None:
        raise CoefficientNotPerfectPower(f"{t.coeff} is not a perfect {n}-th power")
    return GrossNumber((GrossTerm(Fraction(num, den), _ONE, t.gpow / n),))


# -- canonical rendering -------------------------------------------------------

def _coeff_str(c: Fraction) -> str:
    # Coefficient in front of a factor; fractions are parenthesized so the
    # string reparses with the same precedence.
    if c.denominator == 1:
        return str(c.numerator)
    return f"({c.numerator}/{c.denominator})"


def _base_str(b: Fraction) -> str:
    if b.denominator == 1:
        return f"{b.numerator}^G"
    return f"({b.numerator}/{b.denominator})^G"


def _gpow_str(p: Fraction) -> str:
    if p == 1:
        return "G"
    if p.denominator == 1:
        return f"G^{p.numerator}"
    return f"G^({p.numerator}/{p.denominator})"


def _term_str(t: GrossTerm) -> str:
    # Renders |coeff| * factors; the caller supplies the sign.
    c = abs(t.coeff)
    factors = []
    if t.base != 1:
        factors.append(_base_str(t.base))
    if t.gpow != 0:
        factors.append(_gpow_str(t.gpow))
    if not factors:
        return str(c)
    if c != 1:
        factors.insert(0, _coeff_str(c))
    return "*".join(factors)


def format_number(a: GrossNumber) -> str:
    """Canonical string form; injective on canonical values and reparseable."""
    if not a.terms:
        return "0"
    first = a.terms[0]
    out = ("-" if first.coeff < 0 else "") + _term_str(first)
    for t in a.terms[1:]:
        out += " - " if t.coeff < 0 else " + "
        out += _term_str(t)
    return out
