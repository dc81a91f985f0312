from __future__ import annotations

import warnings
from math import comb

import pytest
from hypothesis import given, strategies as st

from freiman import InternalInvariantError, InvalidArgument, analytic_spread, delta
from freiman.families import (
    MixedDegreeWarning,
    Poset,
    VeroneseSpec,
    borel_3vars_delta,
    borel_closure,
    borel_deg2_delta,
    borel_deg2_mu,
    hibi_freiman_predicate,
    hibi_ideal,
    is_strongly_stable,
    katzman_multiplicity,
    maxideal_power_delta,
    poset_downsets,
    squarefree_veronese,
    squarefree_veronese_mu2,
    veronese_topminus1_f,
    veronese_type,
)
from freiman.ideal import MonomialIdeal, maximal_ideal_power
from freiman.search import labeled_posets
from oracles import borel_principal, brute_delta, degree_monomials, downsets_brute, labeled_poset_relations

monomial3 = st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3)).filter(any)


@given(monomial3)
def test_borel_closure_matches_membership_oracle(u):
    b = borel_closure(3, [u])
    assert set(b.generators) == borel_principal(u)
    assert is_strongly_stable(b)


@pytest.mark.parametrize(
    "u, mu, dlt",
    [((0, 0, 1, 1), 9, 1), ((0, 1, 2), 9, 1), ((0, 2, 1), 7, None)],
)
def test_borel_known_values(u, mu, dlt):
    rep = delta(borel_closure(len(u), [u]))
    assert rep.mu == mu
    if dlt is not None:
        assert rep.delta == dlt


def test_borel_closure_two_seeds_and_warning():
    b = borel_closure(3, [(0, 0, 1), (1, 0, 0)])
    assert b == maximal_ideal_power(3, 1)
    with pytest.warns(MixedDegreeWarning):
        borel_closure(3, [(0, 0, 1), (0, 2, 0)])
    with pytest.raises(InvalidArgument):
        borel_closure(3, [])


def test_strongly_stable_negative():
    assert not is_strongly_stable(MonomialIdeal(2, [(0, 1)]))


@pytest.mark.parametrize("n", range(1, 7))
def test_borel_deg2_closed_forms(n):
    for i in range(1, n + 1):
        u = [0] * n
        u[i - 1] += 1
        u[n - 1] += 1
        gens = borel_principal(tuple(u))
        assert len(gens) == borel_deg2_mu(i, n)
        assert borel_deg2_delta(i, n) == brute_delta(gens)[0]


def test_borel_3vars_closed_form():
    for a1 in range(2):
        for a2 in range(4):
            for a3 in range(1, 5):
                gens = borel_principal((a1, a2, a3))
                assert borel_3vars_delta(a2, a3) == brute_delta(gens)[0]
    with pytest.raises(InvalidArgument):
        borel_3vars_delta(1, 0)


def test_poset_basics():
    p = Poset(4, [(1, 2), (2, 3), (1, 3), (1, 4)])
    assert p.covers == ((1, 2), (1, 4), (2, 3))
    assert p.rank() == 2
    assert Poset.chain(4).rank() == 3 and Poset.antichain(3).rank() == 0
    with pytest.raises(InvalidArgument):
        Poset(2, [(1, 2), (2, 1)])


@pytest.mark.parametrize("k, count", [(1, 1), (2, 3), (3, 19), (4, 219)])
def test_labeled_poset_counts(k, count):
    posets = list(labeled_posets(k))
    assert len(posets) == len(set(posets)) == count
    assert {frozenset(p.relations()) for p in posets} == set(labeled_poset_relations(k))


def test_downsets_match_oracle():
    for p in labeled_posets(4):
        ours = [set(s) for s in poset_downsets(p)]
        assert sorted(map(sorted, ours)) == sorted(map(sorted, downsets_brute(4, p.relations())))


def test_hibi_small():
    chain = hibi_ideal(Poset.chain(3))
    assert chain.mu == 4 and chain.n == 6
    anti = hibi_ideal(Poset.antichain(2))
    # x1x2, x1y2, y1x2, y1y2
    assert set(anti.generators) == {(1, 1, 0, 0), (1, 0, 0, 1), (0, 1, 1, 0), (0, 0, 1, 1)}
    assert delta(anti).freiman and analytic_spread(anti) == 3


def test_hibi_predicate_against_delta():
    for k in range(1, 5):
        for p in labeled_posets(k):
            h = hibi_ideal(p)
            ok, witness = hibi_freiman_predicate(p)
            assert ok == delta(h).freiman
            assert analytic_spread(h) == k + 1
            if ok:
                assert p.is_chain(q for q in range(1, k + 1) if q != witness)


def test_hibi_predicate_antichain3():
    assert hibi_freiman_predicate(Poset.antichain(3)) == (False, None)


def test_veronese_spec_validation():
    with pytest.raises(InvalidArgument):
        VeroneseSpec(2, 3, (1, 1))
    with pytest.raises(InvalidArgument):
        VeroneseSpec(2, 3, (2, 1))
    with pytest.raises(InvalidArgument):
        VeroneseSpec(2, 3, (1,))
    with pytest.raises(InvalidArgument):
        squarefree_veronese(3, 3)


def test_veronese_type_generators():
    spec = VeroneseSpec(3, 3, (1, 2, 2))
    expect = {e for e in degree_monomials(3, 3) if all(a <= b for a, b in zip(e, spec.bounds))}
    assert set(veronese_type(spec).generators) == expect


@pytest.mark.parametrize("n", range(2, 8))
def test_squarefree_veronese(n):
    for d in range(1, n):
        i = squarefree_veronese(n, d)
        assert i.mu == comb(n, d)
        _, _, mu2, _ = brute_delta(i.generators)
        assert squarefree_veronese_mu2(n, d) == mu2
        assert delta(i).freiman == (d in (1, n - 1))


def test_squarefree_veronese_4_2():
    assert delta(squarefree_veronese(4, 2)).delta == 1


def test_katzman_top_minus_one():
    for n in range(2, 6):
        for d in range(2, 6):
            if n * (d - 1) <= d:
                continue
            assert katzman_multiplicity(VeroneseSpec.uniform(n, d, d - 1)) == d ** (n - 1) - n


def test_topminus1_zero_set():
    zeros = {(n, d) for n in range(2, 7) for d in range(2, 7) if veronese_topminus1_f(n, d) == 0}
    assert zeros == {(2, d) for d in range(2, 7)} | {(3, 2)}
    with pytest.raises(InvalidArgument):
        veronese_topminus1_f(1, 3)


def test_topminus1_matches_delta():
    for n, d in [(2, 3), (2, 4), (3, 2), (3, 3), (4, 2), (3, 4)]:
        i = veronese_type(VeroneseSpec.uniform(n, d, d - 1))
        assert delta(i).freiman == (veronese_topminus1_f(n, d) == 0)


@pytest.mark.parametrize("n", range(1, 5))
def test_maxideal_power_delta(n):
    for m in range(1, 5):
        assert maxideal_power_delta(n, m) == brute_delta(degree_monomials(n, m))[0]


def test_maxideal_power_delta_three_vars():
    for m in range(1, 9):
        assert maxideal_power_delta(3, m) == (m - 1) * (m - 2) // 2


def test_predicate_disagreement_raises(monkeypatch):
    monkeypatch.setattr(Poset, "rank", lambda self: 0)
    with pytest.raises(InternalInvariantError):
        hibi_freiman_predicate(Poset.chain(4))


def test_no_warning_for_single_degree():
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        borel_closure(3, [(0, 1, 1), (0, 0, 2)])


def test_borel_deg2_mu_up_to_eight():
    for n in range(1, 9):
        for i in range(1, n + 1):
            u = [0] * n
            u[i - 1] += 1
            u[n - 1] += 1
            assert borel_closure(n, [u]).mu == borel_deg2_mu(i, n)


def test_squarefree_veronese_complement_symmetry():
    for n in range(2, 8):
        for d in range(1, n):
            a, b = squarefree_veronese(n, d), squarefree_veronese(n, n - d)
            assert delta(a).freiman == delta(b).freiman
            assert analytic_spread(a) == n


def test_topminus1_f_is_multiplicity_gap():
    from freiman import minimal_multiplicity_gap

    for n in range(2, 5):
        for d in range(2, 5):
            if n * (d - 1) <= d:
                continue
            i = veronese_type(VeroneseSpec.uniform(n, d, d - 1))
            assert i.mu == comb(n + d - 1, d) - n
            assert analytic_spread(i) == n
            assert veronese_topminus1_f(n, d) == minimal_multiplicity_gap(i.mu, n, d ** (n - 1) - n)
