"""Top monomials by direct enumeration of signed triangular configurations.

This module does not use the cocycle algebra.  A configuration splits the
edges into three parallel groups; inside a group the edges of ``I`` point
one way and those of ``J`` the other, and the group acts as a single side
of length ``|sum_I l - sum_J l|``.  A configuration exists when the three
sides satisfy the strict triangle inequality.

Sums are taken over :attr:`LengthVector.integer_lengths`, which orders
exactly like the rational lengths.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterator, Mapping, Sequence

from .errors import BadDegree
from .lengths import LengthVector, format_rational, require_generic

__all__ = [
    "TriangleConfig",
    "chern_power_triangles",
    "chern_three_term_triangles",
    "chern_general_triangles",
    "euler_power_triangles",
    "list_triangles",
    "binomial_mod",
    "equilateral_closed_forms",
]


@dataclass(frozen=True)
class TriangleConfig:
    """Three parallel groups ``(I, J)`` and the resulting triangle sides."""

    groups: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]
    sides: tuple[Fraction, ...]

    def to_record(self, sign: int) -> dict:
        return {
            "groups": [{"I": list(I), "J": list(J)} for I, J in self.groups],
            "sides": [format_rational(s) for s in self.sides],
            "sign": sign,
        }


def _strict_triangle(a: int, b: int, c: int) -> bool:
    return a < b + c and b < a + c and c < a + b


def _splits(arc: Sequence[int], ints: Sequence[int]) -> list[tuple[tuple[int, ...], tuple[int, ...], int]]:
    """Every split of ``arc`` with its first edge codirected, with ``sum_I - sum_J``."""
    anchor, rest = arc[0], list(arc[1:])
    out = []
    for mask in range(1 << len(rest)):
        J = tuple(e for b, e in enumerate(rest) if mask >> b & 1)
        I = (anchor,) + tuple(e for b, e in enumerate(rest) if not mask >> b & 1)
        diff = sum(ints[e - 1] for e in I) - sum(ints[e - 1] for e in J)
        out.append((tuple(sorted(I)), J, diff))
    return out


def _feasible(L: LengthVector, arcs: Sequence[Sequence[int]]) -> Iterator[tuple]:
    """Yield ``(splits, diffs)`` for every split of the arcs closing into a triangle."""
    ints = L.integer_lengths
    per_arc = [_splits(a, ints) for a in arcs]
    for combo in itertools.product(*per_arc):
        diffs = [d for _, _, d in combo]
        if _strict_triangle(*(abs(d) for d in diffs)):
            yield combo, diffs


def _sign(x: int) -> int:
    return 1 if x > 0 else -1


def _monomial_order(n: int, support: Sequence[int]) -> list[int]:
    # classes first; the two highest-numbered other edges end up free
    support = sorted(support)
    return support + [i for i in range(1, n + 1) if i not in support]


def _check_exponents(n: int, exponents: Mapping[int, int]) -> dict[int, int]:
    exps = {int(i): int(d) for i, d in dict(exponents).items() if d}
    if any(d < 0 for d in exps.values()):
        raise BadDegree("negative exponent")
    if any(not 1 <= i <= n for i in exps):
        raise BadDegree(f"class index out of range 1..{n}")
    if sum(exps.values()) != n - 3:
        raise BadDegree(f"exponents sum to {sum(exps.values())}, top degree is {n - 3}")
    return exps


def _general_configs(L: LengthVector, exponents: Mapping[int, int]):
    require_generic(L)
    n = L.n
    exps = _check_exponents(n, exponents)
    order = _monomial_order(n, exps)
    k = len(exps)
    weight = {c: exps[order[c - 1]] for c in range(1, k + 1)}
    Lr = L.permuted(order)
    big = [k + 1] + [e for e in range(1, n - 1) if e != k + 1]
    for combo, diffs in _feasible(Lr, [big, [n - 1], [n]]):
        I, J, diff = combo[0]
        N = len(J) + sum(weight[e] for e in J if e <= k)
        sign = (-1) ** N * _sign(diff)
        groups = tuple(
            (tuple(sorted(order[e - 1] for e in gi)), tuple(sorted(order[e - 1] for e in gj)))
            for gi, gj, _ in combo
        )
        den = Fraction(Lr.edge(1)) / Lr.integer_lengths[0]
        sides = tuple(abs(d) * den for d in diffs)
        yield TriangleConfig(groups, sides), sign


def chern_general_triangles(L: LengthVector, exponents: Mapping[int, int]) -> int:
    """Top Chern monomial as a signed count of triangles (edges ``1..n-2`` parallel).

    The support is renumbered to ``1..k``; the edge ``k+1`` is taken
    codirected and a triangle with antidirected set ``J`` counts
    ``(-1)^N * eps`` where ``N = |J| + sum of d_i over classes i in J``.
    """
    return sum(sign for _, sign in _general_configs(L, exponents))


def chern_power_triangles(L: LengthVector, i: int) -> int:
    """``Ch(i)^(n-3)``: edge ``i`` codirected, sign ``(-1)^|J| * eps``."""
    require_generic(L)
    n = L.n
    if n < 4:
        raise ValueError("needs n >= 4")
    if not 1 <= i <= n:
        raise ValueError(f"edge {i} out of range 1..{n}")
    Lr = L.permuted(_monomial_order(n, [i]))
    total = 0
    for combo, _ in _feasible(Lr, [list(range(1, n - 1)), [n - 1], [n]]):
        _, J, diff = combo[0]
        total += (-1) ** len(J) * _sign(diff)
    return total


def chern_three_term_triangles(L: LengthVector, d1: int, d2: int, d3: int) -> int:
    """``Ch^d1(1) Ch^d2(d1+2) Ch^d3(d1+d2+3)`` from three consecutive parallel groups."""
    require_generic(L)
    n = L.n
    if min(d1, d2, d3) < 1 or d1 + d2 + d3 != n - 3:
        raise BadDegree(f"need positive d1+d2+d3 = {n - 3}, got {(d1, d2, d3)}")
    arcs = [
        list(range(1, d1 + 2)),
        list(range(d1 + 2, d1 + d2 + 3)),
        list(range(d1 + d2 + 3, n + 1)),
    ]
    total = 0
    for combo, diffs in _feasible(L, arcs):
        N = sum(len(J) for _, J, _ in combo)
        eps = _sign(diffs[0]) * _sign(diffs[1]) * _sign(diffs[2])
        total += (-1) ** N * eps
    return total


def euler_power_triangles(L: LengthVector, vertices: tuple[int, int, int] | None = None) -> int:
    """Parity of the triangular configurations computing ``e^(n-3)``.

    Without ``vertices`` the edges ``1..n-2`` form one side.  With vertices
    ``i < j < k`` the sides are the arcs ``i+1..j``, ``j+1..k`` and
    ``k+1..n, 1..i``.
    """
    require_generic(L)
    n = L.n
    if vertices is None:
        arcs = [list(range(1, n - 1)), [n - 1], [n]]
    else:
        i, j, k = vertices
        if not 1 <= i < j < k <= n:
            raise ValueError(f"need 1 <= i < j < k <= {n}, got {vertices}")
        arcs = [
            list(range(i + 1, j + 1)),
            list(range(j + 1, k + 1)),
            list(range(k + 1, n + 1)) + list(range(1, i + 1)),
        ]
    return sum(1 for _ in _feasible(L, arcs)) % 2


def list_triangles(L: LengthVector, spec) -> list[tuple[TriangleConfig, int]]:
    """Contributing configurations with their signs, in the caller's edge labels.

    ``spec`` is a :class:`~polychern.classes.MonomialSpec` or a plain
    exponent mapping.  Over Z2 every configuration has sign 1.
    """
    from .algebra import Ring

    ring = getattr(spec, "ring", Ring.Z)
    if ring is Ring.Z2:
        if spec.total != L.n - 3:
            raise BadDegree(f"Euler power {spec.total} is not the top degree {L.n - 3}")
        # all edges 1..n-2 parallel; any class label gives the same configurations
        return [(cfg, 1) for cfg, _ in _general_configs(L, {1: L.n - 3})]
    exps = spec.as_dict() if hasattr(spec, "as_dict") else dict(spec)
    return list(_general_configs(L, exps))


def binomial_mod(n: int, k: int, p: int) -> int:
    """``C(n, k) mod p`` for prime ``p`` by Lucas' theorem (digit-wise in base p)."""
    if k < 0 or k > n:
        return 0
    out = 1
    while n or k:
        ni, ki = n % p, k % p
        if ki > ni:
            return 0
        out = out * comb(ni, ki) % p
        n //= p
        k //= p
    return out


def equilateral_closed_forms(n_or_k: int, kind: str) -> int:
    """Closed forms for the equilateral ``(2k+3)``-gon.

    ``kind="chern"``: ``Ch(i)^(2k) = (-1)^k C(2k+1, k)``.
    ``kind="euler"``: ``e^(2s) = C(2s+1, s) mod 2``, which is 1 exactly when
    ``s = 2^r - 1``.
    """
    if n_or_k < 0:
        raise ValueError("argument must be nonnegative")
    if kind == "chern":
        k = n_or_k
        return (-1) ** k * comb(2 * k + 1, k)
    if kind == "euler":
        s = n_or_k
        return binomial_mod(2 * s + 1, s, 2)
    raise ValueError(f"unknown kind {kind!r}")
