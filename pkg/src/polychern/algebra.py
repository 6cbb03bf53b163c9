"""Cocycles spanned by nice submanifolds and their cup products.

A nice factor ``(I J')`` freezes the edges of ``I`` codirected and the edges
of ``J`` pointing the opposite way; a term is a formal product of factors
with pairwise disjoint supports.  Factors are kept in canonical orientation
(smallest supported edge on the ``I`` side); flipping sides costs a sign
over the integers and nothing over Z2.

Internally the product rewriting works on bitmask pairs, bit ``k`` standing
for edge ``k+1``.
"""
from __future__ import annotations

import enum
import re
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, NamedTuple, Sequence

from .errors import (
    FreshIndexExhausted,
    NonGeneric,
    NonTransversal,
    NotTopDegree,
    OverlappingSides,
    RingMismatch,
)
from .lengths import LengthVector, polygon_closes, require_generic

__all__ = [
    "Ring",
    "Factor",
    "Term",
    "Unit",
    "UNIT_TERM",
    "Cocycle",
    "normalize_factor",
    "make_term",
    "factor_epsilon",
    "effective_lengths",
    "term_is_empty",
    "degree",
    "cocycle_is_homogeneous",
    "cup",
    "cup_all",
    "evaluate_top",
    "format_factor",
    "format_term",
    "format_cocycle",
    "parse_cocycle",
]


class Ring(enum.Enum):
    Z = "z"
    Z2 = "z2"

    @classmethod
    def parse(cls, text: str) -> "Ring":
        try:
            return cls(text.lower())
        except ValueError:
            raise ValueError(f"unknown ring {text!r}; use 'z' or 'z2'") from None


class Factor(NamedTuple):
    I: tuple[int, ...]
    J: tuple[int, ...] = ()

    @property
    def support(self) -> frozenset[int]:
        return frozenset(self.I) | frozenset(self.J)

    @property
    def degree(self) -> int:
        return len(self.I) + len(self.J) - 1


Term = tuple  # tuple[Factor, ...], sorted by smallest supported edge
UNIT_TERM: Term = ()


class _Unit:
    """A one-edge factor: freezes nothing and acts as the unit class."""

    def __repr__(self):
        return "Unit"


Unit = _Unit()


def _mask(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << (i - 1)
    return m


@lru_cache(maxsize=None)
def _indices(mask: int) -> tuple[int, ...]:
    out = []
    k = 1
    while mask:
        if mask & 1:
            out.append(k)
        mask >>= 1
        k += 1
    return tuple(out)


def _lowbit(m: int) -> int:
    return m & -m


def normalize_factor(raw_I: Iterable[int], raw_J: Iterable[int], ring: Ring = Ring.Z):
    """Canonical form of ``(I J')`` and the sign picked up on the way.

    Returns ``(Factor, sign)``, or ``(Unit, sign)`` for a single edge.
    """
    I, J = frozenset(raw_I), frozenset(raw_J)
    if I & J:
        raise OverlappingSides(f"edges {sorted(I & J)} on both sides")
    if not I | J:
        raise ValueError("a factor needs at least one edge")
    if len(I | J) == 1:
        sign = 1 if I or ring is Ring.Z2 else -1
        return Unit, sign
    sign = 1
    if min(I | J) not in I:
        I, J = J, I
        sign = -1
    if ring is Ring.Z2:
        sign = 1
    return Factor(tuple(sorted(I)), tuple(sorted(J))), sign


def make_term(factors: Iterable, ring: Ring = Ring.Z) -> tuple[Term, int]:
    """Build a canonical term from raw ``(I, J)`` pairs with disjoint supports."""
    out, sign, seen = [], 1, set()
    for f in factors:
        I, J = (f.I, f.J) if isinstance(f, Factor) else (tuple(f[0]), tuple(f[1]) if len(f) > 1 else ())
        fac, s = normalize_factor(I, J, ring)
        support = set(I) | set(J)
        if support & seen:
            raise ValueError(f"factors overlap on {sorted(support & seen)}; use cup()")
        seen |= support
        sign *= s
        if fac is not Unit:
            out.append(fac)
    out.sort(key=lambda f: f.I[0])
    return tuple(out), sign


def degree(t: Term) -> int:
    return sum(f.degree for f in t)


def factor_epsilon(L: LengthVector, f: Factor) -> int:
    """+1 if the codirected side is longer than the antidirected one, else -1."""
    a = sum((L.edge(i) for i in f.I), Fraction(0))
    b = sum((L.edge(j) for j in f.J), Fraction(0))
    if a == b:
        raise NonGeneric(f"sides of {format_factor(f)} have equal length on {L}")
    return 1 if a > b else -1


def effective_lengths(L: LengthVector, t: Term) -> list[Fraction]:
    """Side lengths of the polygon obtained by freezing every factor of ``t``.

    A factor whose two sides balance contributes a zero-length side.
    """
    return _effective(L, t)


def _effective(L: LengthVector, t: Term) -> list[Fraction]:
    out, used = [], set()
    for f in t:
        a = sum((L.edge(i) for i in f.I), Fraction(0))
        b = sum((L.edge(j) for j in f.J), Fraction(0))
        out.append(abs(a - b))
        used |= f.support
    out.extend(L.edge(i) for i in range(1, L.n + 1) if i not in used)
    return out


def term_is_empty(L: LengthVector, t: Term) -> bool:
    return not polygon_closes(effective_lengths(L, t))


@dataclass(frozen=True, eq=True)
class Cocycle:
    """Integer (``Ring.Z``) or mod-2 (``Ring.Z2``) combination of canonical terms.

    ``terms`` must not be mutated; build new cocycles with :meth:`build`
    or the arithmetic operators instead.
    """

    ring: Ring
    n: int
    terms: Mapping[Term, int]

    __hash__ = None

    @classmethod
    def build(cls, ring: Ring, n: int, terms: Mapping[Term, int], L: LengthVector | None = None) -> "Cocycle":
        """Drop zero coefficients, terms above degree ``n - 3`` and, given ``L``, empty terms."""
        if L is not None:
            require_generic(L)
            if L.n != n:
                raise ValueError(f"length vector has {L.n} edges, cocycle has {n}")
        top = n - 3
        kept = {}
        for t, c in terms.items():
            if ring is Ring.Z2:
                c %= 2
            if c == 0 or degree(t) > top:
                continue
            if L is not None and not polygon_closes(_effective(L, t)):
                continue
            kept[t] = c
        return cls(ring, n, dict(sorted(kept.items())))

    @classmethod
    def zero(cls, ring: Ring, n: int) -> "Cocycle":
        return cls(ring, n, {})

    @classmethod
    def unit(cls, ring: Ring, n: int) -> "Cocycle":
        return cls.build(ring, n, {UNIT_TERM: 1})

    @classmethod
    def from_factors(cls, ring: Ring, n: int, factors: Iterable, coeff: int = 1,
                     L: LengthVector | None = None) -> "Cocycle":
        t, s = make_term(factors, ring)
        if any(i > n for f in t for i in f.support):
            raise ValueError(f"edge index beyond n={n}")
        return cls.build(ring, n, {t: coeff * s}, L)

    def _check(self, other: "Cocycle") -> None:
        if self.ring is not other.ring:
            raise RingMismatch(f"{self.ring.name} vs {other.ring.name}")
        if self.n != other.n:
            raise ValueError(f"edge counts differ: {self.n} vs {other.n}")

    def __add__(self, other: "Cocycle") -> "Cocycle":
        self._check(other)
        acc = defaultdict(int, self.terms)
        for t, c in other.terms.items():
            acc[t] += c
        return Cocycle.build(self.ring, self.n, acc)

    def __neg__(self) -> "Cocycle":
        return Cocycle.build(self.ring, self.n, {t: -c for t, c in self.terms.items()})

    def __sub__(self, other: "Cocycle") -> "Cocycle":
        return self + (-other)

    def __rmul__(self, k: int) -> "Cocycle":
        return Cocycle.build(self.ring, self.n, {t: k * c for t, c in self.terms.items()})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def pruned(self, L: LengthVector) -> "Cocycle":
        return Cocycle.build(self.ring, self.n, self.terms, L)

    def __str__(self) -> str:
        return format_cocycle(self)


def cocycle_is_homogeneous(c: Cocycle) -> bool:
    return len({degree(t) for t in c.terms}) <= 1


# -- term products ------------------------------------------------------------

def _term_masks(t: Term) -> tuple[tuple[int, int], ...]:
    return tuple((_mask(f.I), _mask(f.J)) for f in t)


def _finish(work, sign, ring) -> tuple[Term, int]:
    factors = []
    for I, J in work:
        low = _lowbit(I | J)
        if not I & low:
            I, J = J, I
            sign = -sign
        factors.append(Factor(_indices(I), _indices(J)))
    factors.sort(key=lambda f: f.I[0])
    return tuple(factors), (1 if ring is Ring.Z2 else sign)


def _reduce(work: list, sign: int, ring: Ring, n: int, out: list) -> None:
    while True:
        hit = None
        for a in range(len(work)):
            sa = work[a][0] | work[a][1]
            for b in range(a + 1, len(work)):
                if sa & (work[b][0] | work[b][1]):
                    hit = a, b
                    break
            if hit:
                break
        if hit is None:
            out.append(_finish(work, sign, ring))
            return
        a, b = hit
        (I1, J1), (I2, J2) = work[a], work[b]
        rest = [f for k, f in enumerate(work) if k != a and k != b]
        common = (I1 | J1) & (I2 | J2)
        if common & (common - 1) == 0:
            # one shared edge: put it on the codirected side of both, then merge
            if J1 & common:
                I1, J1, sign = J1, I1, -sign
            if J2 & common:
                I2, J2, sign = J2, I2, -sign
            work = rest + [(I1 | I2, J1 | J2)]
            continue
        if ring is Ring.Z2 and J1 == 0 and J2 == 0 and I1 == I2 and bin(I1).count("1") == 2:
            # (ij)(ij) = (ijk) + (ijl) + (ij)(kl) with k, l fresh
            used = 0
            for I, J in work:
                used |= I | J
            fresh = [1 << k for k in range(n) if not used >> k & 1][:2]
            if len(fresh) < 2:
                raise FreshIndexExhausted(f"square of {_indices(I1)} needs two free edges (n={n})")
            k, l = fresh
            for branch in ([(I1 | k, 0)], [(I1 | l, 0)], [(I1, 0), (k | l, 0)]):
                _reduce(rest + branch, sign, ring, n, out)
            return
        raise NonTransversal(
            f"factors {format_factor(*_finish([work[a]], 1, ring)[0])} and "
            f"{format_factor(*_finish([work[b]], 1, ring)[0])} share edges {list(_indices(common))}"
        )


@lru_cache(maxsize=1 << 16)
def _term_product(ta: Term, tb: Term, ring: Ring, n: int) -> tuple[tuple[Term, int], ...]:
    out: list = []
    _reduce(list(_term_masks(ta)) + list(_term_masks(tb)), 1, ring, n, out)
    return tuple(out)


def cup(L: LengthVector | None, a: Cocycle, b: Cocycle) -> Cocycle:
    """Cup product of two cocycles.

    With ``L`` given, terms that are empty manifolds for ``L`` are pruned;
    ``L=None`` keeps the purely formal expansion.  Terms above degree
    ``n - 3`` are always dropped.
    """
    a._check(b)
    acc: dict = defaultdict(int)
    for ta, ca in a.terms.items():
        for tb, cb in b.terms.items():
            for t, s in _term_product(ta, tb, a.ring, a.n):
                acc[t] += ca * cb * s
    return Cocycle.build(a.ring, a.n, acc, L)


def cup_all(L: LengthVector | None, factors: Sequence[Cocycle]) -> Cocycle:
    """Left-to-right cup product of a nonempty sequence."""
    if not factors:
        raise ValueError("empty product")
    acc = factors[0] if L is None else factors[0].pruned(L)
    for c in factors[1:]:
        acc = cup(L, acc, c)
    return acc


def evaluate_top(L: LengthVector, c: Cocycle) -> int:
    """Pair a top-degree cocycle with the fundamental class.

    Every term freezes the polygon into a triangle; an existing triangle is a
    single point, counted with the product of the factor orientation signs
    over Z and with 1 over Z2.
    """
    require_generic(L)
    if L.n != c.n:
        raise ValueError(f"length vector has {L.n} edges, cocycle has {c.n}")
    top = L.n - 3
    total = 0
    for t, coeff in c.terms.items():
        if degree(t) != top:
            raise NotTopDegree(f"term {format_term(t)} has degree {degree(t)}, expected {top}")
        if not polygon_closes(_effective(L, t)):
            continue
        if c.ring is Ring.Z2:
            total += coeff
        else:
            sign = 1
            for f in t:
                sign *= factor_epsilon(L, f)
            total += coeff * sign
    return total % 2 if c.ring is Ring.Z2 else total


# -- text form -------------------------------------------------------------------

def format_factor(f: Factor) -> str:
    marks = {i: "" for i in f.I} | {j: "'" for j in f.J}
    return "(" + " ".join(f"{i}{marks[i]}" for i in sorted(marks)) + ")"


def format_term(t: Term) -> str:
    return "*".join(format_factor(f) for f in t) if t else "(1)"


def format_cocycle(c: Cocycle) -> str:
    if not c.terms:
        return "0"
    parts = []
    for k, (t, coeff) in enumerate(c.terms.items()):
        sign = "-" if coeff < 0 else ("+" if k else "")
        mag = abs(coeff)
        parts.append(f"{sign}{mag if mag != 1 else ''}{format_term(t)}")
    return "".join(parts)


_SUMMAND = re.compile(r"\s*([+-]?)\s*(\d*)\s*((?:\([^()]*\)\s*\*?\s*)+)")
_FACTOR = re.compile(r"\(([^()]*)\)")
_INDEX = re.compile(r"(\d+)\s*('?)")


def _parse_factor_body(body: str) -> tuple[list[int], list[int]]:
    body = body.strip()
    I, J = [], []
    if " " not in body and "," not in body:
        # compact form such as (123') with single-digit indices
        for m in re.finditer(r"(\d)('?)", body):
            (J if m[2] else I).append(int(m[1]))
        return I, J
    for m in _INDEX.finditer(body.replace(",", " ")):
        (J if m[2] else I).append(int(m[1]))
    return I, J


def parse_cocycle(text: str, ring: Ring, n: int) -> Cocycle:
    """Inverse of :func:`format_cocycle`."""
    text = text.strip()
    if text == "0":
        return Cocycle.zero(ring, n)
    acc: dict = defaultdict(int)
    pos = 0
    while pos < len(text):
        m = _SUMMAND.match(text, pos)
        if m is None or m.end() == pos:
            raise ValueError(f"cannot parse cocycle at {text[pos:]!r}")
        sign = -1 if m[1] == "-" else 1
        coeff = int(m[2]) if m[2] else 1
        raw = [_parse_factor_body(body) for body in _FACTOR.findall(m[3])]
        t, s = make_term(raw, ring)
        if any(i > n or i < 1 for f in t for i in f.support):
            raise ValueError(f"edge index out of range 1..{n}")
        acc[t] += sign * coeff * s
        pos = m.end()
    return Cocycle.build(ring, n, acc)
