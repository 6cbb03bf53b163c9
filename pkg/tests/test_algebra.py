from __future__ import annotations

from fractions import Fraction

import pytest

from polychern.algebra import (
    Cocycle,
    Factor,
    Ring,
    Unit,
    UNIT_TERM,
    cocycle_is_homogeneous,
    cup,
    cup_all,
    degree,
    effective_lengths,
    evaluate_top,
    factor_epsilon,
    format_cocycle,
    make_term,
    normalize_factor,
    parse_cocycle,
    term_is_empty,
)
from polychern.errors import (
    FreshIndexExhausted,
    NonGeneric,
    NonTransversal,
    NotTopDegree,
    OverlappingSides,
    RingMismatch,
)
from polychern.lengths import LengthVector, resolve_lengths


def C(text, n, ring=Ring.Z):
    return parse_cocycle(text, ring, n)


def closes_by_intervals(sides):
    """Independent closure test: grow the interval of reachable chain lengths.

    The first m-1 sides reach every distance in [lo, hi]; the polygon closes
    (nondegenerately) when the last side lies strictly inside.
    """
    *chain, last = sides
    lo = hi = chain[0]
    for a in chain[1:]:
        lo, hi = (max(Fraction(0), lo - a, a - hi), hi + a)
    return lo < last < hi


class TestNormalize:
    def test_flip(self):
        assert normalize_factor({2}, {1}) == (Factor((1,), (2,)), -1)
        assert normalize_factor({2}, {1}, Ring.Z2) == (Factor((1,), (2,)), 1)

    def test_canonical_unchanged(self):
        assert normalize_factor({1, 2}, set()) == (Factor((1, 2), ()), 1)

    def test_unit(self):
        assert normalize_factor({3}, set()) == (Unit, 1)
        assert normalize_factor(set(), {3}) == (Unit, -1)

    def test_overlap(self):
        with pytest.raises(OverlappingSides):
            normalize_factor({1, 2}, {2})


@pytest.mark.parametrize("values, I, J, eps", [
    ((3, 1, 1, 1, 1), (1,), (2,), 1),
    ((1, 1, 1, 1, 1), (1,), (2, 3), -1),
    ((3, 2, 2, 1, 1), (1, 4, 5), (2, 3), 1),
])
def test_factor_epsilon(values, I, J, eps):
    assert factor_epsilon(LengthVector(values), Factor(I, J)) == eps


def test_factor_epsilon_tie():
    with pytest.raises(NonGeneric):
        factor_epsilon(LengthVector((1, 1, 1, 1)), Factor((1,), (2,)))


def test_effective_lengths():
    assert effective_lengths(LengthVector((1, 1, 1, 1, 1)), (Factor((1, 2)),)) == [2, 1, 1, 1]
    assert effective_lengths(LengthVector((3, 1, 1, 1, 1)), (Factor((1,), (2,)),)) == [2, 1, 1, 1]
    L = resolve_lengths("1,1,1,1,1")
    t, _ = make_term([((1, 2), (3,)), ((4,), (5,))])
    sides = effective_lengths(L, t)
    assert len(sides) == 2 and all(s > 0 for s in sides)


def test_term_is_empty():
    assert term_is_empty(LengthVector((3, 1, 1, 1, 1)), (Factor((1, 2)),))
    assert not term_is_empty(LengthVector((1, 1, 1, 1, 1)), (Factor((1, 2)),))
    assert term_is_empty(resolve_lengths("1,1,1,1,1"), (Factor((1, 2, 3)),))


class TestCup:
    def test_merge_on_codirected_edge(self):
        assert format_cocycle(cup(None, C("(1 2 3)", 7), C("(3 4 5)", 7))) == "(1 2 3 4 5)"

    def test_merge_on_antidirected_edge(self):
        got = cup(None, C("(1 2 3')", 7), C("(4 5 3')", 7))
        assert got == C("-(1 2 4 5 3')", 7)

    def test_euler_square_formal(self):
        e = C("(1 2)+(1 2')", 5, Ring.Z2)
        f = C("(2 3)+(2 3')", 5, Ring.Z2)
        assert cup(None, e, f) == C("(1 2 3)+(1 2' 3')+(1 2 3')+(1 2' 3)", 5, Ring.Z2)

    def test_square_rule_z2(self):
        a = C("(1 2)", 7, Ring.Z2)
        assert cup(None, a, a) == C("(1 2 3)+(1 2 4)+(1 2)*(3 4)", 7, Ring.Z2)

    def test_square_rule_uses_smallest_fresh(self):
        a = C("(2 5)", 7, Ring.Z2)
        assert cup(None, a, a) == C("(2 5 1)+(2 5 3)+(2 5)*(1 3)", 7, Ring.Z2)

    def test_square_rule_exhausted(self):
        a = C("(1 2)*(3 4)", 5, Ring.Z2)
        b = C("(1 2)", 5, Ring.Z2)
        with pytest.raises(FreshIndexExhausted):
            cup(None, a, b)

    def test_square_over_z_not_transversal(self):
        a = C("(1 2)", 7)
        with pytest.raises(NonTransversal):
            cup(None, a, a)

    def test_two_shared_edges(self):
        with pytest.raises(NonTransversal):
            cup(None, C("(1 2 3)", 8), C("(2 3 4)", 8))

    def test_disjoint_product(self):
        assert cup(None, C("(1 2)", 7), C("(4 5')", 7)) == C("(1 2)*(4 5')", 7)

    def test_degree_cap(self):
        # degree 4 on a pentagon is above the top degree 2
        assert not cup(None, C("(1 2 3')", 5), C("(4 5 3')", 5))

    def test_unit_is_identity(self):
        a = C("(1 2')-(1 3)", 6)
        one = Cocycle.unit(Ring.Z, 6)
        assert cup(None, one, a) == a == cup(None, a, one)

    def test_ring_mismatch(self):
        with pytest.raises(RingMismatch):
            cup(None, C("(1 2)", 5), C("(1 2)", 5, Ring.Z2))

    def test_associative(self):
        n = 9
        a, b, c = C("(1 2)-(1 2')", n), C("(2 3)+(2 3')", n), C("(3 4 5')", n)
        assert cup(None, cup(None, a, b), c) == cup(None, a, cup(None, b, c))

    def test_cup_all_left_to_right(self):
        n = 8
        fs = [C("(1 3)-(1 3')", n), C("(2 3)-(2 3')", n), C("(1 4)-(1 4')", n)]
        assert cup_all(None, fs) == cup(None, cup(None, fs[0], fs[1]), fs[2])
        with pytest.raises(ValueError):
            cup_all(None, [])


def test_pruning_is_sound():
    # every term the engine prunes is empty by the interval oracle, every kept one closes
    L = resolve_lengths("3,2,2,1,1,1+eps,eps")
    a = C("(1 2)-(1 2')+(1 3')", 7)
    b = C("(2 4)-(2 4')+(4 5)", 7)
    formal = cup(None, a, b)
    pruned = cup(L, a, b)
    assert len(pruned.terms) < len(formal.terms)
    for t, k in formal.terms.items():
        closes = closes_by_intervals(effective_lengths(L, t))
        assert (t in pruned.terms) == closes
        if closes:
            assert pruned.terms[t] == k


def test_interval_oracle_agrees_with_closure():
    import random

    rng = random.Random(3)
    for _ in range(300):
        sides = [Fraction(rng.randint(1, 30), rng.randint(1, 4)) for _ in range(rng.randint(3, 7))]
        longest = max(sides)
        expect = longest < sum(sides) - longest
        assert closes_by_intervals(sides) == expect


def test_evaluate_top():
    L = resolve_lengths("3,1,1,1,1")
    assert evaluate_top(L, Cocycle.zero(Ring.Z, 5)) == 0
    with pytest.raises(NotTopDegree):
        evaluate_top(L, C("(1 2)", 5))
    # the single triangle of the worked example: (2 3 1')(4)(5)
    assert evaluate_top(L, C("-(1 2' 3')", 5)) == -1


def test_degree():
    assert degree((Factor((1, 2)),)) == 1
    t, _ = make_term([((1, 2), (3,)), ((4,), (5,))])
    assert degree(t) == 3
    assert degree(UNIT_TERM) == 0
    assert cocycle_is_homogeneous(C("(1 2)+(3 4')", 6))
    assert not cocycle_is_homogeneous(C("(1 2)+(3 4 5)", 7))


def test_z2_reduces_coefficients():
    c = C("(1 2)+(1 2)+(1 3)", 5, Ring.Z2)
    assert c == C("(1 3)", 5, Ring.Z2)
    assert not (C("(1 2)", 5, Ring.Z2) + C("(1 2)", 5, Ring.Z2))


class TestSerialization:
    @pytest.mark.parametrize("text", [
        "-(1 2' 3')+(1 2 3')",
        "(1 2)*(3 4')",
        "3(1 2)-2(1 3' 4)",
        "(1)",
        "0",
    ])
    def test_round_trip(self, text):
        c = C(text, 6)
        assert format_cocycle(c) == text
        assert C(format_cocycle(c), 6) == c

    def test_compact_input(self):
        assert C("(123')", 5) == C("(1 2 3')", 5)

    def test_flip_on_parse(self):
        assert C("(2 1')", 5) == C("-(1 2')", 5)
        assert C("(2 1')", 5, Ring.Z2) == C("(1 2')", 5, Ring.Z2)

    def test_two_digit_indices(self):
        c = C("(1 10 11')", 12)
        assert format_cocycle(c) == "(1 10 11')"

    def test_rejects(self):
        with pytest.raises(ValueError):
            C("(1 2", 5)
        with pytest.raises(ValueError):
            C("(1 9)", 5)
        with pytest.raises(ValueError):
            C("(1 2)*(2 3)", 5)
