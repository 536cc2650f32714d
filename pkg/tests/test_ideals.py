"""Squarefree monomial ideals: arithmetic, powers, colons, text format."""

import itertools

import pytest
from hypothesis import given, settings

import oracles
from sqfpowers.edge_ideals import edge_ideal
from sqfpowers.families import all_graphs, random_squarefree_ideals
from sqfpowers.graphs import to_graph6
from sqfpowers.ideals import (
    MonomialIdeal,
    all_squarefree_monomials,
    colon_by_monomial,
    colon_ideal,
    format_ideal,
    ideal_sum,
    intersect,
    minimalize,
    monomial,
    monomial_colon,
    monomial_degree,
    monomial_divides,
    monomial_lcm,
    monomial_str,
    monomial_vars,
    parse_ideal,
    ratliff_check,
    restrict,
    sqfree_power,
)
from sqfpowers.matchings import is_equimatchable, matching_number
from strategies import mixed_ideals_st, squarefree_ideals_st


# ---------------------------------------------------------------------------
# monomial helpers

def test_monomial_mask_roundtrip():
    m = monomial([3, 1, 5])
    assert m == 0b10101
    assert monomial_vars(m) == (1, 3, 5)
    assert monomial_degree(m) == 3
    assert monomial(()) == 0
    assert monomial_vars(0) == ()
    assert monomial_str(m) == "x1*x3*x5"
    assert monomial_str(0) == "1"


def test_monomial_arithmetic():
    a, b = monomial([1, 2]), monomial([2, 3])
    assert monomial_lcm(a, b) == monomial([1, 2, 3])
    assert monomial_colon(a, b) == monomial([1])
    assert monomial_colon(b, a) == monomial([3])
    assert monomial_divides(monomial([2]), a)
    assert not monomial_divides(a, b)
    assert monomial_divides(0, a)


# ---------------------------------------------------------------------------
# the ideal type

def test_ideal_validation():
    with pytest.raises(ValueError):
        MonomialIdeal(2, (monomial([3]),))  # variable beyond n
    with pytest.raises(ValueError):
        MonomialIdeal(3, (monomial([2]), monomial([1, 2])))  # not an antichain
    with pytest.raises(ValueError):
        MonomialIdeal(3, (monomial([2]), monomial([1])))  # unsorted
    with pytest.raises(ValueError):
        MonomialIdeal(65, ())


def test_zero_and_unit():
    Z = MonomialIdeal.zero(3)
    U = MonomialIdeal.unit(3)
    assert Z.is_zero and not Z.is_unit
    assert U.is_unit and not U.is_zero
    assert not Z.contains(monomial([1]))
    assert U.contains(0)
    assert Z.pure_degree() is None
    assert U.pure_degree() == 0


def test_from_supports_minimalizes():
    I = MonomialIdeal.from_supports(4, [(1, 2), (1, 2, 3), (3, 4)])
    assert I.gens == (monomial([1, 2]), monomial([3, 4]))
    assert I.pure_degree() == 2
    J = MonomialIdeal.from_supports(4, [(1,), (2, 3)])
    assert J.generator_degrees() == (1, 2)
    with pytest.raises(ValueError):
        J.pure_degree()


def test_minimalize_matches_oracle():
    masks = [monomial(s) for s in [(1, 2), (2,), (1, 2, 3), (3, 4), (4, 3)]]
    I = minimalize(4, masks)
    assert set(I.gens) == oracles._minimal_masks(masks)


def test_contains():
    I = MonomialIdeal.from_supports(4, [(1, 2)])
    assert I.contains(monomial([1, 2]))
    assert I.contains(monomial([1, 2, 4]))
    assert not I.contains(monomial([1, 4]))
    assert not I.contains(0)


# ---------------------------------------------------------------------------
# squarefree powers

def test_sqfree_power_edge_cases():
    I = MonomialIdeal.from_supports(4, [(1, 2), (3, 4), (2, 3)])
    assert sqfree_power(I, 0) == MonomialIdeal.unit(4)
    assert sqfree_power(I, 1) == I
    assert sqfree_power(I, 2) == MonomialIdeal.from_supports(4, [(1, 2, 3, 4)])
    assert sqfree_power(I, 3).is_zero
    assert sqfree_power(MonomialIdeal.zero(3), 2).is_zero
    with pytest.raises(ValueError):
        sqfree_power(I, -1)


def test_sqfree_power_matches_membership_oracle():
    ideals = random_squarefree_ideals(40, max_n=6, max_gens=6, seed=7)
    for I in ideals:
        for k in range(1, 4):
            P = sqfree_power(I, k)
            want = oracles.brute_sqfree_power_members(I, k)
            got = {m for m in all_squarefree_monomials(I.n) if P.contains(m)}
            assert got == want, (I, k)


@settings(max_examples=60, deadline=None)
@given(mixed_ideals_st(max_n=6, max_gens=6))
def test_sqfree_power_membership_property(I):
    for k in (2, 3):
        P = sqfree_power(I, k)
        want = oracles.brute_sqfree_power_members(I, k)
        assert {m for m in all_squarefree_monomials(I.n) if P.contains(m)} == want


def test_power_supports_equal_matching_supports_exhaustively():
    # the generators of the k-th power of an edge ideal are exactly the
    # supports of the k-matchings, for every graph with at most 8 vertices
    from sqfpowers.matchings import enumerate_matchings

    for n in range(1, 9):
        for G in all_graphs(n):
            I = edge_ideal(G)
            nu = matching_number(G)
            for k in range(1, nu + 1):
                P = sqfree_power(I, k)
                supports = {
                    monomial(v for e in M for v in e)
                    for M in enumerate_matchings(G, k)
                }
                assert set(P.gens) == supports, (to_graph6(G), k)
            assert sqfree_power(I, nu + 1).is_zero, to_graph6(G)


# ---------------------------------------------------------------------------
# colon and intersection

def _brute_members(I):
    return {m for m in all_squarefree_monomials(I.n) if I.contains(m)}


def test_colon_intersect_sum_match_brute_membership():
    ideals = random_squarefree_ideals(30, max_n=6, max_gens=6, seed=11)
    for I, J in itertools.combinations(ideals, 2):
        if I.n != J.n:
            continue
        mi, mj = _brute_members(I), _brute_members(J)
        assert _brute_members(intersect(I, J)) == (mi & mj)
        assert _brute_members(ideal_sum(I, J)) == (mi | mj)
        if not J.is_zero:
            K = colon_ideal(I, J)
            want = {
                m
                for m in all_squarefree_monomials(I.n)
                if all(I.contains(m | g) for g in J.gens)
            }
            assert _brute_members(K) == want


def test_colon_by_monomial():
    I = MonomialIdeal.from_supports(4, [(1, 2), (3, 4)])
    assert colon_by_monomial(I, monomial([1])) == MonomialIdeal.from_supports(
        4, [(2,), (3, 4)]
    )
    assert colon_by_monomial(I, monomial([1, 2])) == MonomialIdeal.unit(4)
    assert colon_ideal(I, I) == MonomialIdeal.unit(4)
    with pytest.raises(ValueError):
        colon_ideal(I, MonomialIdeal.zero(4))
    with pytest.raises(ValueError):
        colon_ideal(I, MonomialIdeal.zero(3))


def test_restrict():
    I = MonomialIdeal.from_supports(4, [(1, 2), (3, 4), (2, 3)])
    R = restrict(I, monomial([1, 2, 3]))
    assert R == MonomialIdeal.from_supports(4, [(1, 2), (2, 3)])
    assert restrict(I, 0).is_zero
    assert restrict(I, monomial([1, 2, 3, 4])) == I


def test_colon_chain_is_monotone():
    # I^[k] <= I^[k]:I^[l-1] <= I^[k]:I^[l] as l grows
    for I in random_squarefree_ideals(40, max_n=7, max_gens=7, seed=13):
        for k in (2, 3):
            Ik = sqfree_power(I, k)
            prev = Ik
            for ell in range(1, k + 1):
                Il = sqfree_power(I, ell)
                if Il.is_zero:
                    break
                Q = colon_ideal(Ik, Il)
                assert all(Q.contains(g) for g in prev.gens), (I, k, ell)
                prev = Q


# ---------------------------------------------------------------------------
# colon stability of powers

def test_ratliff_check_validation():
    I = MonomialIdeal.from_supports(4, [(1, 2), (3, 4)])
    with pytest.raises(ValueError):
        ratliff_check(I, 2, 0)
    with pytest.raises(ValueError):
        ratliff_check(I, 2, 3)
    assert ratliff_check(I, 3, 3) is None  # colon by the zero power is vacuous
    assert ratliff_check(I, 3, 1) is True  # zero ideal colons to itself
    assert ratliff_check(I, 2, 1) is True


def test_colon_stability_on_random_ideals():
    # I^[k] : I = I^[k] for k >= 2 on the seeded random family
    for I in random_squarefree_ideals(500, max_n=8, max_gens=8):
        for k in (2, 3):
            outcome = ratliff_check(I, k, 1)
            assert outcome in (True, None), (format_ideal(I), k)


def test_colon_stability_on_equimatchable_edge_ideals():
    # all colons I^[k] : I^[l] = I^[k] with l < k for equimatchable graphs
    for n in range(2, 9):
        for G in all_graphs(n):
            if not is_equimatchable(G) or not G.edges:
                continue
            I = edge_ideal(G)
            nu = matching_number(G)
            for k in range(2, nu + 1):
                for ell in range(1, k):
                    assert ratliff_check(I, k, ell) is True, (to_graph6(G), k, ell)


# ---------------------------------------------------------------------------
# text format

def test_parse_format_roundtrip():
    I = MonomialIdeal.from_supports(5, [(1, 2), (3, 4, 5)])
    assert parse_ideal(format_ideal(I)) == I
    assert format_ideal(I) == "n 5\n1 2\n3 4 5\n"


def test_parse_ideal_unit_and_comments():
    I = parse_ideal("# unit ideal\nn 3\n-\n")
    assert I.is_unit
    Z = parse_ideal("n 4\n")
    assert Z.is_zero and Z.n == 4


def test_parse_ideal_errors():
    with pytest.raises(ValueError):
        parse_ideal("1 2\n")  # missing header
    with pytest.raises(ValueError):
        parse_ideal("")
    with pytest.raises(ValueError):
        parse_ideal("n 3\nn 4\n")  # duplicate header
    with pytest.raises(ValueError):
        parse_ideal("n 3 7\n")
    with pytest.raises(ValueError):
        parse_ideal("n 3\n1 5\n")  # variable out of range
    with pytest.raises(ValueError):
        parse_ideal("n 3\n0 1\n")


@settings(max_examples=80, deadline=None)
@given(mixed_ideals_st(max_n=8))
def test_parse_format_roundtrip_property(I):
    assert parse_ideal(format_ideal(I)) == I
