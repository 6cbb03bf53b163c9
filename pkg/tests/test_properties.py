"""Property-based checks with hypothesis; the heavy randomized suites live in test_acceptance."""
from __future__ import annotations

from fractions import Fraction

from hypothesis import assume, given, settings
from hypothesis import strategies as st

from polychern.algebra import Cocycle, Ring, cup, format_cocycle, normalize_factor, parse_cocycle
from polychern.classes import MonomialSpec, chern_monomial, euler_power_top
from polychern.errors import FreshIndexExhausted, NonTransversal
from polychern.lengths import (
    SymbolicLengths,
    chamber_signature,
    default_eta,
    perturb,
    polygon_closes,
)
from polychern.oracle import chern_general_triangles

rings = st.sampled_from([Ring.Z, Ring.Z2])


@st.composite
def terms(draw, n):
    edges = draw(st.permutations(range(1, n + 1)))
    factors, pos = [], 0
    for _ in range(draw(st.integers(0, 3))):
        size = draw(st.integers(2, 3))
        if pos + size > n:
            break
        chunk = edges[pos:pos + size]
        pos += size
        cut = draw(st.integers(1, size))
        factors.append((tuple(chunk[:cut]), tuple(chunk[cut:])))
    return factors


@st.composite
def cocycles(draw, n, ring, max_terms=4):
    c = Cocycle.zero(ring, n)
    for _ in range(draw(st.integers(0, max_terms))):
        coeff = draw(st.integers(-3, 3))
        c = c + Cocycle.from_factors(ring, n, draw(terms(n)), coeff)
    return c


@st.composite
def symbolic(draw, nmin=4, nmax=7):
    n = draw(st.integers(nmin, nmax))
    base = draw(st.lists(st.integers(0, 6), min_size=n, max_size=n))
    extra = draw(st.sets(st.integers(1, n)))
    flags = frozenset(i + 1 for i, b in enumerate(base) if b == 0) | extra
    return SymbolicLengths(tuple(base), flags)


@settings(max_examples=150, deadline=None)
@given(st.data(), rings, st.integers(3, 9))
def test_format_parse_round_trip(data, ring, n):
    c = data.draw(cocycles(n, ring))
    text = format_cocycle(c)
    assert parse_cocycle(text, ring, n) == c
    assert format_cocycle(parse_cocycle(text, ring, n)) == text


@settings(max_examples=150, deadline=None)
@given(st.data(), rings, st.integers(6, 10))
def test_cup_associative_and_commutative(data, ring, n):
    a, b, c = (data.draw(cocycles(n, ring, 2)) for _ in range(3))
    try:
        left = cup(None, cup(None, a, b), c)
        right = cup(None, a, cup(None, b, c))
        ba = cup(None, b, a)
        ab = cup(None, a, b)
    except (NonTransversal, FreshIndexExhausted):
        assume(False)
    assert left == right
    assert ab == ba


@given(st.sets(st.integers(1, 9), min_size=1), st.sets(st.integers(1, 9), min_size=1))
def test_flip_antisymmetry(I, J):
    assume(not I & J)
    f, s = normalize_factor(I, J, Ring.Z)
    g, t = normalize_factor(J, I, Ring.Z)
    assert f == g and s == -t
    assert normalize_factor(I, J, Ring.Z2) == normalize_factor(J, I, Ring.Z2)


@settings(max_examples=100, deadline=None)
@given(symbolic())
def test_perturb_stable_under_smaller_eta(S):
    L = perturb(S)
    assert L.generic
    eta = default_eta(S)
    sig = chamber_signature(L)
    for k in (2, 4, 16):
        assert chamber_signature(perturb(S, eta / k)) == sig


@settings(max_examples=60, deadline=None)
@given(symbolic(4, 7), st.data())
def test_algebra_matches_triangles(S, data):
    L = perturb(S)
    assume(polygon_closes(L.values))
    n = L.n
    support = data.draw(st.lists(st.integers(1, n), min_size=1, max_size=n - 3, unique=True))
    exps = {i: 1 for i in support}
    for _ in range(n - 3 - len(support)):
        exps[data.draw(st.sampled_from(support))] += 1
    value = chern_monomial(L, MonomialSpec(exps))
    assert value == chern_general_triangles(L, exps)
    assert value % 2 == euler_power_top(L)


@given(st.lists(st.fractions(min_value=Fraction(1, 10), max_value=10), min_size=3, max_size=8))
def test_closure_is_permutation_invariant(sides):
    assert polygon_closes(sides) == polygon_closes(list(reversed(sides)))
