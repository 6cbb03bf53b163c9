"""Exact length vectors of flexible polygons.

Everything here works on :class:`fractions.Fraction` values.  Sign decisions
near a wall must be exact, so floats are converted through their decimal
string (``1.1`` becomes ``11/10``), never through their binary expansion.
"""
from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .errors import NonGeneric

__all__ = [
    "LengthVector",
    "SymbolicLengths",
    "ChamberSignature",
    "Vanishing",
    "as_fraction",
    "format_rational",
    "signed_sum",
    "is_generic",
    "lies_on_wall",
    "default_eta",
    "perturb",
    "chamber_signature",
    "polygon_closes",
    "chern_nonvanishing",
    "parse_lengths",
    "resolve_lengths",
]


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        return Fraction(repr(x))
    return Fraction(x)


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _integer_scale(values: Sequence[Fraction]) -> list[int]:
    den = math.lcm(*(v.denominator for v in values)) if values else 1
    return [int(v * den) for v in values]


def _subset_sums(ints: Sequence[int]) -> list[int]:
    # sums[mask] = sum of ints[i] for bits i of mask
    sums = [0]
    for x in ints:
        sums += [s + x for s in sums]
    return sums


def _min_gap(ints: Sequence[int]) -> int | None:
    """Smallest positive difference between two subset sums, or None."""
    distinct = sorted(set(_subset_sums(ints)))
    if len(distinct) < 2:
        return None
    return min(b - a for a, b in zip(distinct, distinct[1:]))


@dataclass(frozen=True)
class LengthVector:
    """Bar lengths ``l_1..l_n`` of a flexible polygon (edges are 1-based)."""

    values: tuple[Fraction, ...]

    def __post_init__(self):
        vals = tuple(as_fraction(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        if len(vals) < 3:
            raise ValueError(f"need at least 3 edges, got {len(vals)}")
        if any(v <= 0 for v in vals):
            raise ValueError(f"lengths must be strictly positive: {self}")

    @property
    def n(self) -> int:
        return len(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def edge(self, i: int) -> Fraction:
        """Length of edge ``i`` (1-based)."""
        return self.values[i - 1]

    def total(self) -> Fraction:
        return sum(self.values, Fraction(0))

    def permuted(self, order: Sequence[int]) -> "LengthVector":
        """New vector whose k-th edge is edge ``order[k]`` of this one."""
        if sorted(order) != list(range(1, self.n + 1)):
            raise ValueError(f"not a permutation of 1..{self.n}: {order}")
        return LengthVector(tuple(self.values[i - 1] for i in order))

    def scaled(self, c) -> "LengthVector":
        c = as_fraction(c)
        return LengthVector(tuple(v * c for v in self.values))

    @cached_property
    def integer_lengths(self) -> list[int]:
        """Lengths times their common denominator; same order relations as the lengths."""
        return _integer_scale(self.values)

    @cached_property
    def generic(self) -> bool:
        sums = _subset_sums(self.integer_lengths)
        return len(set(sums)) == len(sums)

    def __str__(self) -> str:
        return "(" + ", ".join(format_rational(v) for v in self.values) + ")"


@dataclass(frozen=True)
class SymbolicLengths:
    """Base lengths plus the set of (1-based) edges carrying a small epsilon."""

    base: tuple[Fraction, ...]
    epsilon_flags: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        base = tuple(as_fraction(v) for v in self.base)
        flags = frozenset(self.epsilon_flags)
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "epsilon_flags", flags)
        n = len(base)
        if n < 3:
            raise ValueError(f"need at least 3 edges, got {n}")
        if any(v < 0 for v in base):
            raise ValueError("base lengths must be nonnegative")
        if not flags <= set(range(1, n + 1)):
            raise ValueError(f"epsilon flags out of range 1..{n}: {sorted(flags)}")
        unflagged_zero = [i + 1 for i, v in enumerate(base) if v == 0 and i + 1 not in flags]
        if unflagged_zero:
            raise ValueError(f"zero length without epsilon on edges {unflagged_zero}")

    @property
    def n(self) -> int:
        return len(self.base)

    def __str__(self) -> str:
        parts = []
        for i, v in enumerate(self.base, start=1):
            if i in self.epsilon_flags:
                parts.append("eps" if v == 0 else f"{format_rational(v)}+eps")
            else:
                parts.append(format_rational(v))
        return ",".join(parts)


def signed_sum(L: LengthVector, signs: Sequence[int]) -> Fraction:
    """``sum(signs[i] * l_i)`` computed exactly."""
    if len(signs) != L.n:
        raise ValueError(f"expected {L.n} signs, got {len(signs)}")
    return sum((s * v for s, v in zip(signs, L.values)), Fraction(0))


def is_generic(L: LengthVector) -> bool:
    """True iff no nontrivial signed sum ``sum(+-l_i)`` over a nonempty subset vanishes.

    Two disjoint sets A, B have equal length sums exactly when two distinct
    subsets do, so this is checked by asking that all ``2**n`` subset sums
    be distinct.
    """
    return L.generic


def require_generic(L: LengthVector) -> None:
    if not L.generic:
        raise NonGeneric(f"length vector {L} has a vanishing signed sum")


def lies_on_wall(values: Iterable) -> bool:
    """True iff some subset sum equals the sum of its complement."""
    ints = _integer_scale([as_fraction(v) for v in values])
    total = sum(ints)
    return total % 2 == 0 and (total // 2) in set(_subset_sums(ints))


def default_eta(S: SymbolicLengths) -> Fraction:
    gap = _min_gap(_integer_scale(S.base))
    den = math.lcm(*(v.denominator for v in S.base))
    m = Fraction(1) if gap is None else Fraction(gap, den)
    return m / 2 ** (S.n + 2)


def perturb(S: SymbolicLengths, eta: Fraction | None = None) -> LengthVector:
    """Realize symbolic epsilons as exact rationals and return a generic vector.

    Flagged edge ``i`` receives ``eta * 2**(i-1)``.  When the base itself is
    not generic every edge gets a tie-breaker; unflagged edges then receive
    ``eta * 2**(i-1-n)`` so that the flagged epsilons always dominate them.
    ``eta`` defaults to (smallest nonzero signed sum of the base) / 2**(n+2),
    small enough that no nonzero signed sum of the base changes sign.
    """
    n = S.n
    limit = default_eta(S)
    if eta is None:
        eta = limit
    eta = as_fraction(eta)
    if not 0 < eta <= limit:
        raise ValueError(f"eta must lie in (0, {limit}]")
    base_generic = all(v > 0 for v in S.base) and LengthVector(S.base).generic
    out = list(S.base)
    for i in range(1, n + 1):
        if i in S.epsilon_flags:
            out[i - 1] += eta * 2 ** (i - 1)
        elif not base_generic:
            scale = Fraction(1, 2**n) if S.epsilon_flags else Fraction(1)
            out[i - 1] += eta * 2 ** (i - 1) * scale
    L = LengthVector(tuple(out))
    assert L.generic, f"perturbation of {S} is not generic"
    return L


@dataclass(frozen=True)
class ChamberSignature:
    """Signs of ``sum_S l - sum_{S^c} l`` for every subset S containing edge 1.

    ``signs[r]`` belongs to the subset whose bitmask is ``1 | (r << 1)``
    (bit ``k`` standing for edge ``k+1``).
    """

    n: int
    signs: tuple[int, ...]

    def sign(self, subset: Iterable[int]) -> int:
        subset = set(subset)
        if 1 not in subset:
            # complement contains 1 and carries the opposite sign
            return -self.sign(set(range(1, self.n + 1)) - subset)
        mask = sum(1 << (i - 1) for i in subset)
        return self.signs[mask >> 1]

    def items(self):
        for r, s in enumerate(self.signs):
            mask = 1 | (r << 1)
            yield tuple(i + 1 for i in range(self.n) if mask >> i & 1), s

    def as_dict(self) -> dict[tuple[int, ...], int]:
        return dict(self.items())


def chamber_signature(L: LengthVector) -> ChamberSignature:
    ints = L.integer_lengths
    total = sum(ints)
    rest = _subset_sums(ints[1:])
    signs = []
    for s in rest:
        d = 2 * (ints[0] + s) - total
        if d == 0:
            raise NonGeneric(f"length vector {L} lies on a wall")
        signs.append(1 if d > 0 else -1)
    return ChamberSignature(L.n, tuple(signs))


def polygon_closes(lams: Sequence) -> bool:
    """Strict closing condition: the longest side is shorter than the others together."""
    lams = [as_fraction(x) for x in lams]
    if not lams:
        return False
    longest = max(lams)
    return longest < sum(lams, Fraction(0)) - longest


class Vanishing(enum.Enum):
    NONZERO = "NonZero"
    ZERO_EXCEPTIONAL = "ZeroExceptional"
    EMPTY_SPACE = "EmptySpace"


def chern_nonvanishing(L: LengthVector, i: int) -> Vanishing:
    """Decide whether the first Chern class of edge ``i`` vanishes.

    With lengths sorted as ``l(1) > l(2) > ...`` the class is nonzero for
    every edge unless ``l(2) + l(3) > l(1) + l(4) + ... + l(n)``; in that
    single chamber the three longest edges have vanishing class.
    """
    require_generic(L)
    if L.n < 4:
        raise ValueError("needs n >= 4")
    if not 1 <= i <= L.n:
        raise ValueError(f"edge {i} out of range 1..{L.n}")
    if not polygon_closes(L.values):
        return Vanishing.EMPTY_SPACE
    order = sorted(range(1, L.n + 1), key=lambda k: L.edge(k), reverse=True)
    srt = [L.edge(k) for k in order]
    if srt[1] + srt[2] < srt[0] + sum(srt[3:], Fraction(0)):
        return Vanishing.NONZERO
    return Vanishing.ZERO_EXCEPTIONAL if i in order[:3] else Vanishing.NONZERO


_NUMBER = r"\d+(?:\.\d+)?(?:/\d+)?"
_TOKEN = re.compile(rf"^(?:(?P<num>{_NUMBER})(?P<eps>\s*\+\s*eps)?|(?P<bare>eps))$")


def parse_lengths(text: str) -> SymbolicLengths:
    """Parse ``"3+eps,2,5/2,1,eps"`` style input."""
    base, flags = [], set()
    for i, tok in enumerate(text.split(","), start=1):
        m = _TOKEN.match(tok.strip())
        if m is None:
            raise ValueError(f"bad length token {tok!r}")
        if m["bare"]:
            base.append(Fraction(0))
            flags.add(i)
        else:
            base.append(Fraction(m["num"]))
            if m["eps"]:
                flags.add(i)
    return SymbolicLengths(tuple(base), frozenset(flags))


def resolve_lengths(source: str | SymbolicLengths | Sequence) -> LengthVector:
    """Turn user input into a generic vector, refusing inputs that sit on a wall.

    Without epsilon flags a base lying on a wall has no well-defined chamber,
    so :class:`NonGeneric` is raised.  Otherwise ties that do not change the
    chamber are broken by :func:`perturb`.
    """
    if isinstance(source, str):
        S = parse_lengths(source)
    elif isinstance(source, SymbolicLengths):
        S = source
    else:
        S = SymbolicLengths(tuple(source))
    if not S.epsilon_flags and lies_on_wall(S.base):
        raise NonGeneric(f"lengths {S} lie on a wall; add epsilons to pick a chamber")
    return perturb(S)
