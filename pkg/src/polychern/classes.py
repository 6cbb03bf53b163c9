"""Euler and Chern class representatives and top-monomial evaluation."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence

from .algebra import (
    Cocycle,
    Ring,
    cup_all,
    evaluate_top,
    make_term,
)
from .errors import BadDegree
from .lengths import LengthVector, require_generic

__all__ = [
    "MonomialSpec",
    "RepresentationChoice",
    "parse_monomial",
    "euler_class",
    "euler_pair",
    "chern_rep",
    "canonical_representation",
    "chern_monomial",
    "chern_monomial_cocycle",
    "monomial_from_reps",
    "euler_power_top",
    "euler_power_cocycle",
    "relabel",
    "top_monomials",
    "chern_table",
]

EULER_KEY = 0


@dataclass(frozen=True)
class MonomialSpec:
    """Exponents of a monomial in characteristic classes.

    Over ``Ring.Z`` the keys are edge indices.  Over ``Ring.Z2`` all the
    tautological bundles share one Euler class, so only the total exponent
    matters; ``e:K`` is stored under the pseudo-edge ``0``.
    """

    exponents: tuple[tuple[int, int], ...]
    ring: Ring = Ring.Z

    def __init__(self, exponents: Mapping[int, int] | Sequence[tuple[int, int]], ring: Ring = Ring.Z):
        items = dict(exponents).items() if not isinstance(exponents, Mapping) else exponents.items()
        clean = tuple(sorted((int(i), int(d)) for i, d in items if d))
        object.__setattr__(self, "exponents", clean)
        object.__setattr__(self, "ring", ring)
        for i, d in clean:
            if d < 0:
                raise ValueError(f"negative exponent on {i}")
            if ring is Ring.Z and i == EULER_KEY:
                raise ValueError("the Euler class lives over Z2 only")

    def as_dict(self) -> dict[int, int]:
        return dict(self.exponents)

    @property
    def total(self) -> int:
        return sum(d for _, d in self.exponents)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self.exponents)

    def __str__(self) -> str:
        if self.ring is Ring.Z2:
            return f"e:{self.total}"
        return ",".join(f"{i}:{d}" for i, d in self.exponents)


def parse_monomial(text: str, ring: Ring = Ring.Z) -> MonomialSpec:
    """Parse ``"1:2,4:1"`` or ``"e:3"``."""
    exps: dict[int, int] = {}
    for tok in text.split(","):
        tok = tok.strip()
        if not tok:
            continue
        key, sep, val = tok.partition(":")
        if not sep:
            key, val = tok, "1"
        key = key.strip().lower()
        idx = EULER_KEY if key == "e" else int(key)
        if idx < 0:
            raise ValueError(f"bad class index {key!r}")
        exps[idx] = exps.get(idx, 0) + int(val)
    if EULER_KEY in exps and ring is Ring.Z:
        raise ValueError("'e' denotes the Euler class; use ring z2")
    return MonomialSpec(exps, ring)


@dataclass(frozen=True)
class RepresentationChoice:
    """Partner edges used for each class: one dashed partner and the bold ones."""

    dashed: Mapping[int, int]
    bold: Mapping[int, tuple[int, ...]]

    def pairs(self) -> list[tuple[int, int]]:
        out = [(i, j) for i, j in self.dashed.items()]
        for i, js in self.bold.items():
            out.extend((i, j) for j in js)
        return out


def _n_of(n: int | None, L: LengthVector | None) -> int:
    if L is not None:
        if n is not None and n != L.n:
            raise ValueError(f"n={n} disagrees with {L.n} lengths")
        return L.n
    if n is None:
        raise ValueError("pass n or L")
    return n


def _check_indices(n: int, *idx: int) -> None:
    if len(set(idx)) != len(idx):
        raise ValueError(f"indices must be distinct: {idx}")
    for i in idx:
        if not 1 <= i <= n:
            raise ValueError(f"index {i} out of range 1..{n}")


def euler_class(j: int, k: int, r: int, *, n: int | None = None, L: LengthVector | None = None) -> Cocycle:
    """``e = (jk) + (kr) + (jr)`` over Z2."""
    n = _n_of(n, L)
    _check_indices(n, j, k, r)
    terms: dict = {}
    for a, b in ((j, k), (k, r), (j, r)):
        t, _ = make_term([((a, b), ())], Ring.Z2)
        terms[t] = terms.get(t, 0) + 1
    return Cocycle.build(Ring.Z2, n, terms, L)


def euler_pair(i: int, j: int, *, n: int | None = None, L: LengthVector | None = None) -> Cocycle:
    """``e = (ij) + (i j')`` over Z2."""
    n = _n_of(n, L)
    _check_indices(n, i, j)
    plain, _ = make_term([((i, j), ())], Ring.Z2)
    anti, _ = make_term([((i,), (j,))], Ring.Z2)
    return Cocycle.build(Ring.Z2, n, {plain: 1, anti: 1}, L)


def chern_rep(i: int, j: int, *, n: int | None = None, L: LengthVector | None = None) -> Cocycle:
    """``Ch(i) = (ij) - (i j')`` over Z, any partner ``j != i``."""
    n = _n_of(n, L)
    _check_indices(n, i, j)
    plain, _ = make_term([((i, j), ())])
    anti, s = make_term([((i,), (j,))])
    return Cocycle.build(Ring.Z, n, {plain: 1, anti: -s}, L)


def relabel(c: Cocycle, mapping: Mapping[int, int]) -> Cocycle:
    """Rename edges ``p -> mapping[p]`` and renormalize every term."""
    terms: dict = {}
    for t, coeff in c.terms.items():
        raw = [(tuple(mapping[i] for i in f.I), tuple(mapping[j] for j in f.J)) for f in t]
        new, s = make_term(raw, c.ring)
        terms[new] = terms.get(new, 0) + coeff * s
    return Cocycle.build(c.ring, c.n, terms)


def _validate_chern_spec(n: int, m: MonomialSpec, top: bool) -> None:
    if m.ring is not Ring.Z:
        raise ValueError("Chern monomials need ring Z")
    for i, _ in m.exponents:
        if not 1 <= i <= n:
            raise BadDegree(f"class index {i} out of range 1..{n}")
    if top and m.total != n - 3:
        raise BadDegree(f"exponents sum to {m.total}, top degree is {n - 3}")
    if not top and m.total > n - 3:
        raise BadDegree(f"exponents sum to {m.total}, above top degree {n - 3}")


def canonical_representation(n: int, m: MonomialSpec) -> tuple[list[int], RepresentationChoice]:
    """Renumbering and partner scheme making every product transversal.

    Returns ``order`` (new edge ``p`` is original edge ``order[p-1]``) and the
    partners in the new labels: classes become ``1..k``, each gets the dashed
    partner ``k+1`` and ``d_i - 1`` bold partners taken consecutively from
    ``k+2`` on.
    """
    support = list(m.support)
    k = len(support)
    order = support + [i for i in range(1, n + 1) if i not in support]
    dashed = {c: k + 1 for c in range(1, k + 1)}
    bold, nxt = {}, k + 2
    for c, (_, d) in enumerate(m.exponents, start=1):
        bold[c] = tuple(range(nxt, nxt + d - 1))
        nxt += d - 1
    if nxt - 1 > n:
        raise BadDegree(f"monomial {m} does not fit into {n} edges")
    return order, RepresentationChoice(dashed, bold)


def chern_monomial_cocycle(L: LengthVector, m: MonomialSpec, *, original_labels: bool = True) -> Cocycle:
    """Pruned expansion of a Chern monomial (any degree up to ``n - 3``)."""
    require_generic(L)
    _validate_chern_spec(L.n, m, top=False)
    if not m.exponents:
        return Cocycle.unit(Ring.Z, L.n).pruned(L)
    order, reps = canonical_representation(L.n, m)
    Lr = L.permuted(order)
    factors = [chern_rep(i, j, n=L.n) for i, j in reps.pairs()]
    c = cup_all(Lr, factors)
    if original_labels:
        c = relabel(c, {p: order[p - 1] for p in range(1, L.n + 1)})
    return c


def chern_monomial(L: LengthVector, m: MonomialSpec | Mapping[int, int]) -> int:
    """Intersection number of a top monomial in Chern classes."""
    if not isinstance(m, MonomialSpec):
        m = MonomialSpec(m)
    require_generic(L)
    _validate_chern_spec(L.n, m, top=True)
    order, reps = canonical_representation(L.n, m)
    Lr = L.permuted(order)
    factors = [chern_rep(i, j, n=L.n) for i, j in reps.pairs()]
    return evaluate_top(Lr, cup_all(Lr, factors))


def monomial_from_reps(L: LengthVector | None, reps: Sequence[tuple[int, int]], ring: Ring = Ring.Z,
                       n: int | None = None) -> Cocycle:
    """Product of class representatives with explicitly chosen partners.

    Each pair ``(i, j)`` contributes ``Ch(i) = (ij) - (i j')`` over Z or
    ``e = (ij) + (i j')`` over Z2.  Products that are not transversal raise
    :class:`~polychern.errors.NonTransversal`.
    """
    n = _n_of(n, L)
    build = chern_rep if ring is Ring.Z else euler_pair
    return cup_all(L, [build(i, j, n=n) for i, j in reps])


def euler_power_cocycle(L: LengthVector | None, power: int, n: int | None = None) -> Cocycle:
    """``e^power`` expanded along the chain ``prod_m [(m, m+1) + (m, (m+1)')]``."""
    n = _n_of(n, L)
    if power == 0:
        c = Cocycle.unit(Ring.Z2, n)
        return c if L is None else c.pruned(L)
    if not 0 < power <= n - 3:
        raise BadDegree(f"power {power} outside 0..{n - 3}")
    return cup_all(L, [euler_pair(m, m + 1, n=n) for m in range(1, power + 1)])


def _partition_cocycle(L: LengthVector) -> Cocycle:
    n = L.n
    rest = list(range(2, n))
    terms: dict = {}
    for r in range(len(rest)):
        for extra in itertools.combinations(rest, r):
            T1 = (1, *extra)
            T2 = tuple(i for i in rest if i not in extra)
            t, _ = make_term([(T1, ()), (T2, ())], Ring.Z2)
            terms[t] = terms.get(t, 0) + 1
    return Cocycle.build(Ring.Z2, n, terms, L)


def euler_power_top(L: LengthVector, method: str = "chain") -> int:
    """Top power ``e^(n-3)`` in Z2, by chain expansion or by the partition sum."""
    require_generic(L)
    if L.n < 4:
        raise ValueError("needs n >= 4")
    if method == "chain":
        c = euler_power_cocycle(L, L.n - 3)
    elif method == "partition":
        c = _partition_cocycle(L)
    else:
        raise ValueError(f"unknown method {method!r}")
    return evaluate_top(L, c)


def top_monomials(n: int, support_size: int | None = None) -> Iterator[MonomialSpec]:
    """Every top Chern monomial on ``n`` edges, as multisets of edge indices."""
    for combo in itertools.combinations_with_replacement(range(1, n + 1), n - 3):
        exps: dict[int, int] = {}
        for i in combo:
            exps[i] = exps.get(i, 0) + 1
        if support_size is None or len(exps) == support_size:
            yield MonomialSpec(exps)


def chern_table(L: LengthVector) -> list[list[int]]:
    """Symmetric table of ``Ch(i) Ch(j)`` for a pentagon."""
    if L.n != 5:
        raise BadDegree("pairwise products are top degree only for pentagons")
    table = [[0] * 5 for _ in range(5)]
    for i in range(1, 6):
        for j in range(i, 6):
            spec = {i: 2} if i == j else {i: 1, j: 1}
            table[i - 1][j - 1] = table[j - 1][i - 1] = chern_monomial(L, spec)
    return table
