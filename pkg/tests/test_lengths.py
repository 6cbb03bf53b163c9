from __future__ import annotations

import itertools
from fractions import Fraction

import pytest

from polychern.errors import NonGeneric
from polychern.lengths import (
    LengthVector,
    SymbolicLengths,
    Vanishing,
    as_fraction,
    chamber_signature,
    chern_nonvanishing,
    default_eta,
    is_generic,
    lies_on_wall,
    parse_lengths,
    perturb,
    polygon_closes,
    resolve_lengths,
    signed_sum,
)


def brute_signature(L):
    n = L.n
    out = {}
    for r in range(n):
        for rest in itertools.combinations(range(2, n + 1), r):
            S = (1, *rest)
            a = sum(L.edge(i) for i in S)
            b = L.total() - a
            out[S] = 1 if a > b else -1
    return out


@pytest.mark.parametrize("values, signs, expected", [
    ((1, 1, 1, 1, 1), (1, 1, -1, 0, 0), 1),
    ((1, 1, 2), (1, 1, -1), 0),
    ((3, 2, 2, 1, 1), (1, -1, -1, 1, 1), 1),
])
def test_signed_sum(values, signs, expected):
    assert signed_sum(LengthVector(values), signs) == expected


def test_signed_sum_length_mismatch():
    with pytest.raises(ValueError):
        signed_sum(LengthVector((1, 1, 1)), (1, 1))


def test_genericity():
    assert not is_generic(LengthVector((1, 1, 2)))
    assert not is_generic(LengthVector((3, 2, 2, 1, 1)))  # 2 + 1 - 3
    # odd equilateral: off every wall, but 1 - 1 = 0 is still a vanishing signed sum
    assert not is_generic(LengthVector((1, 1, 1, 1, 1)))
    assert not lies_on_wall((1, 1, 1, 1, 1))
    assert is_generic(LengthVector((1, 2, 4, 8, 16)))


def test_lengthvector_rejects_bad_input():
    with pytest.raises(ValueError):
        LengthVector((1, 1))
    with pytest.raises(ValueError):
        LengthVector((1, 0, 1))


def test_float_goes_through_repr():
    assert as_fraction(2.5) == Fraction(5, 2)
    assert as_fraction(0.1) == Fraction(1, 10)


def test_permuted():
    L = LengthVector((5, 4, 3))
    assert L.permuted([3, 1, 2]).values == (3, 5, 4)
    with pytest.raises(ValueError):
        L.permuted([1, 1, 2])


class TestPerturb:
    def test_flagged_edge(self):
        S = SymbolicLengths((2, 1, 1, 1, 0), frozenset({5}))
        L = perturb(S)
        assert L.generic
        eta = default_eta(S)
        sig = chamber_signature(L)
        # shrinking the epsilon scale must not leave the chamber
        for k in (2, 4):
            assert chamber_signature(perturb(S, eta / k)) == sig
        assert sig == brute_signature_as_chamber(L)

    def test_exceptional_chamber(self):
        L = perturb(SymbolicLengths((1, 1, 1, 0, 0), frozenset({4, 5})))
        assert L.generic
        assert dict(chamber_signature(L).items()) == brute_signature(L)
        assert L.edge(2) + L.edge(3) > L.edge(1) + L.edge(4) + L.edge(5)

    def test_generic_base_untouched(self):
        L = perturb(SymbolicLengths((1, 2, 4, 8, 17)))
        assert L.values == (1, 2, 4, 8, 17)

    def test_equilateral_is_nudged_not_moved(self):
        # (1,1,1,1,1) has vanishing partial sums, so it needs tie-breakers,
        # but it sits off every wall and the chamber must not change
        L = perturb(SymbolicLengths((1, 1, 1, 1, 1)))
        assert L.generic
        assert chamber_signature(L) == chamber_signature(LengthVector((1, 1, 1, 1, 1)))

    def test_eta_bounds(self):
        S = SymbolicLengths((2, 1, 1, 1, 0), frozenset({5}))
        with pytest.raises(ValueError):
            perturb(S, default_eta(S) * 2)
        with pytest.raises(ValueError):
            perturb(S, 0)

    def test_unflagged_zero_rejected(self):
        with pytest.raises(ValueError):
            SymbolicLengths((1, 1, 0))


def brute_signature_as_chamber(L):
    sig = brute_signature(L)
    return chamber_signature(L).__class__(L.n, tuple(sig[S] for S, _ in chamber_signature(L).items()))


def test_signature_examples():
    a = chamber_signature(LengthVector((1, 1, 1, 1, 1)))
    b = chamber_signature(LengthVector(("1.1", 1, 1, 1, "0.9")))
    assert a == b
    c = chamber_signature(LengthVector((3, 1, 1, 1, 1)))
    assert c != a
    assert c.sign((1, 2)) == 1 and a.sign((1, 2)) == -1
    assert c.sign((1,)) == a.sign((1,)) == -1


def test_signature_matches_brute_force():
    L = resolve_lengths("3,2,2,1,1")
    assert chamber_signature(L).as_dict() == brute_signature(L)


def test_signature_sign_of_complement():
    L = LengthVector((3, 1, 1, 1, 1))
    sig = chamber_signature(L)
    assert sig.sign((2, 3, 4, 5)) == -sig.sign((1,))


def test_signature_raises_on_wall():
    with pytest.raises(NonGeneric):
        chamber_signature(LengthVector((1, 1, 1, 1)))


@pytest.mark.parametrize("lams, closes", [
    ((1, 1, 1), True),
    ((3, 1, 1), False),
    ((6, "3.5", 3), True),
    ((2, 1, 1), False),   # degenerate counts as not closing
])
def test_polygon_closes(lams, closes):
    assert polygon_closes(lams) is closes


def test_chern_nonvanishing():
    L = resolve_lengths("1,1,1,eps,eps")
    assert chern_nonvanishing(L, 1) is Vanishing.ZERO_EXCEPTIONAL
    assert chern_nonvanishing(L, 3) is Vanishing.ZERO_EXCEPTIONAL
    assert chern_nonvanishing(L, 4) is Vanishing.NONZERO
    eq = resolve_lengths("1,1,1,1,1")
    assert all(chern_nonvanishing(eq, i) is Vanishing.NONZERO for i in range(1, 6))
    assert chern_nonvanishing(resolve_lengths("5,1,1,1,1"), 2) is Vanishing.EMPTY_SPACE


class TestParse:
    def test_grammar(self):
        S = parse_lengths("3, 5/2 ,2.5,eps,1+eps")
        assert S.base == (3, Fraction(5, 2), Fraction(5, 2), 0, 1)
        assert S.epsilon_flags == {4, 5}
        assert str(S) == "3,5/2,5/2,eps,1+eps"

    @pytest.mark.parametrize("bad", ["", "1,,2", "1,-2,3", "a,b,c", "1,2,eps+1"])
    def test_rejects(self, bad):
        with pytest.raises(ValueError):
            parse_lengths(bad)

    def test_resolve_refuses_wall(self):
        with pytest.raises(NonGeneric):
            resolve_lengths("1,1,2")
        with pytest.raises(NonGeneric):
            resolve_lengths("2,1,1,1,1")
        # an epsilon picks a side of the wall
        assert resolve_lengths("2,1,1,1,1+eps").generic
