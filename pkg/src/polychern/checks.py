"""Randomized consistency suites shared by ``polychern verify`` and the tests.

Each suite returns :class:`PropertyResult` counters.  All randomness flows
from one :class:`random.Random`, so a seed fixes the whole report.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable

from .algebra import Cocycle, Ring, cup, degree, evaluate_top, normalize_factor
from .classes import (
    MonomialSpec,
    chern_monomial,
    euler_power_top,
    monomial_from_reps,
    top_monomials,
)
from .errors import FreshIndexExhausted, NonTransversal
from .known import PENTAGON_TABLES
from .lengths import (
    LengthVector,
    SymbolicLengths,
    chamber_signature,
    perturb,
    polygon_closes,
    resolve_lengths,
)
from .oracle import (
    chern_general_triangles,
    chern_power_triangles,
    chern_three_term_triangles,
    euler_power_triangles,
)

__all__ = [
    "PropertyResult",
    "random_lengths",
    "random_monomial",
    "random_forest_reps",
    "random_term_cocycle",
    "same_chamber_neighbour",
    "oracle_suite",
    "structural_suite",
    "lengths_suite",
    "run_all",
]


@dataclass
class PropertyResult:
    name: str
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def record(self, good: bool, detail: Callable[[], str] | str = "") -> None:
        if good:
            self.passed += 1
            return
        self.failed += 1
        if len(self.failures) < 5:
            self.failures.append(detail() if callable(detail) else detail)

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "failed": self.failed,
            "skipped": self.skipped,
            "failures": list(self.failures),
        }


def random_lengths(rng: random.Random, nmin: int = 4, nmax: int = 9, max_base: int = 6,
                   nonempty: bool = True) -> tuple[SymbolicLengths, LengthVector]:
    """Small integer base lengths plus random epsilons, realized generically."""
    for _ in range(100):
        n = rng.randint(nmin, nmax)
        base = [rng.randint(0, max_base) for _ in range(n)]
        flags = frozenset(i + 1 for i, b in enumerate(base) if b == 0 or rng.random() < 0.25)
        S = SymbolicLengths(tuple(base), flags)
        L = perturb(S)
        if not nonempty or polygon_closes(L.values):
            return S, L
    return S, L


def random_monomial(rng: random.Random, n: int) -> MonomialSpec:
    top = n - 3
    k = rng.randint(1, top)
    support = rng.sample(range(1, n + 1), k)
    exps = {i: 1 for i in support}
    for _ in range(top - k):
        exps[rng.choice(support)] += 1
    return MonomialSpec(exps)


def random_forest_reps(rng: random.Random, m: MonomialSpec, n: int) -> list[tuple[int, int]]:
    """Random partners ``(i, j)`` for every class copy whose edges form a forest.

    Adding ``n - 3`` forest edges to ``n`` vertices never exhausts the
    partners available outside the current component, and a forest keeps
    every intermediate product transversal.
    """
    parent = list(range(n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    copies = [i for i, d in m.exponents for _ in range(d)]
    rng.shuffle(copies)
    reps = []
    for i in copies:
        choices = [j for j in range(1, n + 1) if find(j) != find(i)]
        j = rng.choice(choices)
        parent[find(j)] = find(i)
        reps.append((i, j))
    return reps


def random_term_cocycle(rng: random.Random, n: int, ring: Ring, max_factors: int = 2) -> Cocycle:
    """A single random term with disjoint factors of two or three edges."""
    edges = list(range(1, n + 1))
    rng.shuffle(edges)
    factors, pos = [], 0
    for _ in range(rng.randint(1, max_factors)):
        size = rng.choice((2, 2, 3))
        if pos + size > n:
            break
        chunk = edges[pos:pos + size]
        pos += size
        cut = rng.randint(1, size)
        factors.append((tuple(chunk[:cut]), tuple(chunk[cut:])))
    return Cocycle.from_factors(ring, n, factors)


def same_chamber_neighbour(rng: random.Random, L: LengthVector) -> LengthVector | None:
    """A generic vector with the chamber signature of ``L``, moved as far as possible."""
    target = chamber_signature(L)
    v = [rng.randint(-3, 3) for _ in range(L.n)]
    if not any(v):
        v[0] = 1
    t = L.total() / 4
    for _ in range(60):
        cand = [x + t * d for x, d in zip(L.values, v)]
        if all(x > 0 for x in cand):
            M = LengthVector(tuple(cand))
            if M.generic and M != L and chamber_signature(M) == target:
                return M
        t /= 2
    return None


def _three_term_layout(m: MonomialSpec, n: int) -> tuple[list[int], tuple[int, int, int]]:
    """Renumbering putting three classes at ``1, d1+2, d1+d2+3`` as the three-group count needs."""
    (a, da), (b, db), (c, dc) = m.exponents
    others = [i for i in range(1, n + 1) if i not in (a, b, c)]
    order = [a] + others[:da] + [b] + others[da:da + db] + [c] + others[da + db:]
    return order, (da, db, dc)


def oracle_suite(trials: int, rng: random.Random, nmax: int = 9) -> list[PropertyResult]:
    """Algebra expansion against the triangle counts, Euler methods, parity bridge."""
    general = PropertyResult("oracle: algebra = general triangle count")
    power = PropertyResult("oracle: algebra = single-class triangle count")
    three = PropertyResult("oracle: algebra = three-group triangle count")
    euler = PropertyResult("euler: chain = partition = triangle parity")
    parity = PropertyResult("parity bridge: Chern monomial mod 2 = e^(n-3)")
    for _ in range(trials):
        _, L = random_lengths(rng, 4, max(4, nmax))
        n = L.n
        m = random_monomial(rng, n)
        value = chern_monomial(L, m)
        tri = chern_general_triangles(L, m.as_dict())
        general.record(value == tri, lambda: f"{L} {m}: algebra {value}, triangles {tri}")
        if len(m.exponents) == 1:
            p = chern_power_triangles(L, m.support[0])
            power.record(p == value, lambda: f"{L} {m}: algebra {value}, power count {p}")
        if len(m.exponents) == 3:
            order, ds = _three_term_layout(m, n)
            t3 = chern_three_term_triangles(L.permuted(order), *ds)
            three.record(t3 == value, lambda: f"{L} {m}: algebra {value}, three-group {t3}")
        i, j, k = sorted(rng.sample(range(1, n + 1), 3))
        e = (
            euler_power_top(L, "chain"),
            euler_power_top(L, "partition"),
            euler_power_triangles(L),
            euler_power_triangles(L, (i, j, k)),
        )
        euler.record(len(set(e)) == 1, lambda: f"{L}: chain/partition/default/({i},{j},{k}) = {e}")
        parity.record(value % 2 == e[0], lambda: f"{L} {m}: {value} mod 2 vs e^(n-3) = {e[0]}")
    return [general, power, three, euler, parity]


def structural_suite(trials: int, rng: random.Random, nmax: int = 9) -> list[PropertyResult]:
    comm = PropertyResult("cup commutativity")
    flip = PropertyResult("flip antisymmetry")
    additive = PropertyResult("degree additivity")
    chamber = PropertyResult("chamber invariance")
    perm = PropertyResult("permutation equivariance")
    reps = PropertyResult("representative independence of Ch(i)")
    nmax = max(5, nmax)
    for _ in range(trials):
        # algebra-level properties on random terms
        n = rng.randint(5, nmax)
        ring = rng.choice((Ring.Z, Ring.Z2))
        _, L = random_lengths(rng, n, n, nonempty=False)
        # redraw until the pair is transversal, which is what both properties are about
        for _ in range(50):
            a = random_term_cocycle(rng, n, ring)
            b = random_term_cocycle(rng, n, ring)
            try:
                formal = cup(None, a, b)
                break
            except (NonTransversal, FreshIndexExhausted):
                formal = None
        if formal is None:
            comm.skipped += 1
            additive.skipped += 1
        else:
            ab, ba = cup(L, a, b), cup(L, b, a)
            comm.record(ab == ba, lambda: f"{a} * {b} on {L}: {ab} vs {ba}")
            da = degree(next(iter(a.terms))) if a else 0
            db = degree(next(iter(b.terms))) if b else 0
            additive.record(all(degree(t) == da + db for t in formal.terms),
                            lambda: f"{a} * {b} = {formal}")

        size = rng.randint(2, n)
        edges = rng.sample(range(1, n + 1), size)
        cut = rng.randint(1, size - 1)
        I, J = edges[:cut], edges[cut:]
        f1, s1 = normalize_factor(I, J, Ring.Z)
        f2, s2 = normalize_factor(J, I, Ring.Z)
        flip.record(f1 == f2 and s1 == -s2, lambda: f"({I} | {J}): {f1},{s1} vs {f2},{s2}")

        # class-level properties on random monomials
        _, L = random_lengths(rng, 4, nmax)
        m = random_monomial(rng, L.n)
        value = chern_monomial(L, m)

        M = same_chamber_neighbour(rng, L)
        if M is None:
            chamber.skipped += 1
        else:
            other = chern_monomial(M, m)
            chamber.record(other == value, lambda: f"{m}: {L} -> {value}, {M} -> {other}")

        order = list(range(1, L.n + 1))
        rng.shuffle(order)
        where = {old: new for new, old in enumerate(order, start=1)}
        mp = MonomialSpec({where[i]: d for i, d in m.exponents})
        pv = chern_monomial(L.permuted(order), mp)
        perm.record(pv == value, lambda: f"{L} {m} permuted by {order}: {value} vs {pv}")

        chosen = random_forest_reps(rng, m, L.n)
        rv = evaluate_top(L, monomial_from_reps(L, chosen))
        reps.record(rv == value, lambda: f"{L} {m} with partners {chosen}: {value} vs {rv}")
    return [comm, flip, additive, chamber, perm, reps]


def lengths_suite(L: LengthVector) -> list[PropertyResult]:
    """Exhaustive checks on one length vector, plus any known table for its chamber."""
    out = []
    if L.n >= 4:
        eq = PropertyResult(f"all top monomials of {L}: algebra = triangle count")
        bridge = PropertyResult(f"parity bridge on {L}")
        e = euler_power_top(L, "chain")
        e_ok = e == euler_power_top(L, "partition") == euler_power_triangles(L)
        for m in top_monomials(L.n):
            v = chern_monomial(L, m)
            t = chern_general_triangles(L, m.as_dict())
            eq.record(v == t, lambda: f"{m}: {v} vs {t}")
            bridge.record(v % 2 == e, lambda: f"{m}: {v} mod 2 vs {e}")
        euler = PropertyResult(f"euler methods on {L}")
        euler.record(e_ok, "chain, partition and triangle parity disagree")
        out += [eq, bridge, euler]
    if L.n == 5:
        sig = chamber_signature(L)
        for text, table in PENTAGON_TABLES.items():
            if chamber_signature(resolve_lengths(text)) != sig:
                continue
            res = PropertyResult(f"table for chamber of ({text})")
            for i in range(1, 6):
                for j in range(1, 6):
                    spec = {i: 2} if i == j else {i: 1, j: 1}
                    v = chern_monomial(L, spec)
                    res.record(v == table[i - 1][j - 1],
                               lambda: f"Ch({i})Ch({j}) = {v}, expected {table[i - 1][j - 1]}")
            out.append(res)
    return out


def run_all(trials: int, seed: int, nmax: int = 8, L: LengthVector | None = None) -> list[PropertyResult]:
    rng = random.Random(seed)
    results = []
    if L is not None:
        results += lengths_suite(L)
    if trials > 0:
        results += oracle_suite(trials, rng, nmax)
        results += structural_suite(trials, rng, nmax)
    return results
