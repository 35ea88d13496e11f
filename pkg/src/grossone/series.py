"""Closed forms for sums with an explicitly stated number of addends.

There is deliberately no "sum to infinity" entry point: every operation takes
its length, finite or infinite, as a gross-integer argument.  That is what
dissolves the classic divergent-series puzzles: ``1+2+4+...`` with ``k``
addends is ``2**k - 1`` for every ``k``, and Grandi's series with ``k``
addends is decided by the parity of ``k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NotAGrossInteger, OddLength, UnitRatio
from .gnum import (
    G,
    GrossNumber,
    Parity,
    RationalLike,
    exp_gross,
    floor_div_mod,
    gnum,
    linear_gross_parts,
)


def _as_gross(value) -> GrossNumber:
    return value if isinstance(value, GrossNumber) else gnum(value)


@dataclass(frozen=True)
class GrandiResult:
    """Value of ``1 - 1 + 1 - ...`` with a stated number of addends."""

    value: int
    length_parity: Parity


@dataclass(frozen=True)
class RamanujanAudit:
    """Both evaluations of ``-3 * (1 + 2 + ... + n)`` under the rearrangement."""

    lhs: GrossNumber
    rhs: GrossNumber
    consistent: bool

    def to_json(self) -> dict:
        return {"lhs": str(self.lhs), "rhs": str(self.rhs), "consistent": self.consistent}

    def __str__(self) -> str:
        return f"lhs = {self.lhs}; rhs = {self.rhs}; consistent = {'true' if self.consistent else 'false'}"


def ap_sum(first, step, count) -> GrossNumber:
    """Sum of an arithmetic progression with ``count`` addends, exactly."""
    first = _as_gross(first)
    step = _as_gross(step)
    count = _as_gross(count)
    return count * first + step * count * (count - 1) / 2


def triangular(n) -> GrossNumber:
    """``1 + 2 + ... + n  ==  n*(n+1)/2`` for finite and infinite n alike."""
    n = _as_gross(n)
    return n * (n + 1) / 2


def geometric(q: RationalLike, k) -> GrossNumber:
    """``sum_{i=1..k} q**i  ==  q*(q**k - 1)/(q - 1)`` with an exact ``q**k``.

    A negative ratio is fine: ``q**k == (-1)**k * |q|**k`` and the sign of
    ``(-1)**k`` is decided by the parity of ``k``.
    """
    q = Fraction(q)
    if q == 1:
        raise UnitRatio("ratio 1 has no geometric closed form; use ap_sum")
    k = _as_gross(k)
    if q < 0:
        qk = exp_gross(-q, k)
        if k.parity() is Parity.ODD:
            qk = -qk
    else:
        qk = exp_gross(q, k)
    return (qk - 1) * q / (q - 1)


def powers_of_two_sum(k) -> GrossNumber:
    """``1 + 2 + 4 + ... + 2**(k-1)  ==  2**k - 1``."""
    k = _as_gross(k)
    a, _ = linear_gross_parts(k)
    if a < 0 or k.sign() <= 0:
        raise ValueError("the number of addends must be positive")
    return exp_gross(2, k) - 1


def grandi(k) -> GrandiResult:
    """Grandi's series with ``k`` addends: 0 when k is even, 1 when odd."""
    k = _as_gross(k)
    if k.sign() <= 0:
        raise ValueError("the number of addends must be positive")
    p = k.parity()
    return GrandiResult(0 if p is Parity.EVEN else 1, p)


def grandi_rearranged(k) -> GrossNumber:
    """Grandi's series under the ``1+1-1`` rearrangement, length held fixed.

    With ``k`` even there are ``k/2`` positive and ``k/2`` negative addends.
    Blocks of ``1+1-1`` run until the positives are exhausted; the remaining
    addends are lone ``-1``s.  The total must (and does) equal ``grandi(k)``.
    """
    k = _as_gross(k)
    if k.sign() <= 0:
        raise ValueError("the number of addends must be positive")
    if k.parity() is not Parity.EVEN:
        raise OddLength(f"{k} is odd; the block rearrangement needs an even length")
    positives, _ = floor_div_mod(k, 2)
    negatives = positives
    blocks, leftover = floor_div_mod(positives, 2)
    return blocks + leftover - (negatives - blocks)


def ramanujan_audit(n=None) -> RamanujanAudit:
    """Check the rearranged computation of ``-3 * triangular(n)``.

    The grouped side splits the alternating-with-displacement sum into three
    arithmetic progressions of ``n/2`` addends each: the odd addends, minus
    the even addends, minus four times the upper half that the displacement
    pushed beyond the stated length.  Defaults to ``n = G``.
    """
    n = G if n is None else _as_gross(n)
    if not n.is_gross_integer():
        raise NotAGrossInteger(f"{n} is not a gross-integer")
    if n.parity() is not Parity.EVEN:
        raise OddLength(f"{n} is odd; the grouping needs n/2-addend progressions")
    half = n / 2
    lhs = -3 * triangular(n)
    rhs = ap_sum(1, 2, half) - ap_sum(2, 2, half) - 4 * ap_sum(half + 1, 1, half)
    expected = -3 * half * (n + 1)
    return RamanujanAudit(lhs, rhs, lhs == rhs == expected)


def infinitesimal_sum(k) -> GrossNumber:
    """``k`` addends of size ``G**-2``: infinitesimal, finite or infinite
    depending on ``k``."""
    return G ** -2 * _as_gross(k)
