from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from conftest import equigenerated
from freiman import (
    InvalidArgument,
    Monomial,
    MonomialIdeal,
    frobenius_primitive_root,
    height,
    ideal_power,
    ideal_product,
    ideal_sum,
    is_equigenerated,
    minimalize,
    pseudo_frobenius_power,
)
from freiman.ideal import embed, maximal_ideal_power, monomials_of_degree, pure_powers
from oracles import hitting_height, minimal, power_gens, product_gens


def test_minimalize_drops_multiples_and_duplicates():
    i = minimalize(3, [(1, 0, 0), (2, 1, 0), (1, 0, 0), (0, 1, 1)])
    assert i.generators == ((1, 0, 0), (0, 1, 1))
    assert i.mu == 2


def test_canonical_order_is_degree_then_descending():
    i = MonomialIdeal(3, [(0, 0, 2), (1, 1, 0), (2, 0, 0), (0, 1, 0)])
    assert [tuple(g) for g in i] == [(0, 1, 0), (2, 0, 0), (0, 0, 2)]


def test_rejects_bad_input():
    with pytest.raises(InvalidArgument):
        MonomialIdeal(2, [])
    with pytest.raises(InvalidArgument):
        MonomialIdeal(2, [(0, 0)])
    with pytest.raises(InvalidArgument):
        MonomialIdeal(2, [(1, 0, 0)])
    with pytest.raises(InvalidArgument):
        Monomial((1, -1))
    with pytest.raises(InvalidArgument):
        ideal_power(pure_powers(2, 1), 0)
    with pytest.raises(InvalidArgument):
        ideal_product(pure_powers(2, 1), pure_powers(3, 1))


def test_monomial_helpers():
    u = Monomial((0, 2, 1))
    assert u.degree == 3 and u.support == (1, 2) and u.max_var == 3
    assert u.divides((1, 2, 1)) and not u.divides((0, 1, 5))
    assert u.times((1, 0, 0)) == (1, 2, 1)
    assert u.scaled(2) == (0, 4, 2)
    assert Monomial.variable(3, 1, 4) == (0, 4, 0)


def test_equigenerated_flag():
    assert is_equigenerated(pure_powers(3, 2)) == (True, 2)
    assert is_equigenerated(MonomialIdeal(2, [(1, 0), (0, 3)])) == (False, None)


def test_membership_and_containment():
    i = MonomialIdeal(2, [(2, 0), (0, 1)])
    assert (3, 0) in i and (1, 1) in i and (1, 0) not in i
    assert i.contains_ideal(MonomialIdeal(2, [(2, 2)]))
    assert not MonomialIdeal(2, [(2, 2)]).contains_ideal(i)


def test_monomials_of_degree_counts():
    from math import comb

    for n in range(1, 5):
        for d in range(0, 5):
            gens = monomials_of_degree(n, d)
            assert len(gens) == comb(n + d - 1, d)
            assert len(set(gens)) == len(gens)
    assert monomials_of_degree(3, 1, [0, 2]) == [(1, 0, 0), (0, 0, 1)]


def test_maximal_ideal_power_and_embed():
    m2 = maximal_ideal_power(2, 2)
    assert m2.generators == ((2, 0), (1, 1), (0, 2))
    e = embed(m2, 3)
    assert e.n == 3 and all(g[2] == 0 for g in e)
    with pytest.raises(InvalidArgument):
        embed(m2, 1)


def test_relabel():
    i = MonomialIdeal(3, [(2, 1, 0)])
    assert i.relabel((2, 0, 1)).generators == ((1, 0, 2),)


@given(equigenerated(), equigenerated())
def test_product_matches_oracle(i, j):
    if i.n != j.n:
        return
    assert set(ideal_product(i, j).generators) == product_gens(i.generators, j.generators)
    assert ideal_product(i, j) == ideal_product(j, i) == i * j


@given(equigenerated(max_n=3, max_d=2), st.integers(1, 3))
def test_power_matches_oracle(i, k):
    assert set(ideal_power(i, k).generators) == power_gens(i.generators, k)
    assert ideal_power(i, k) == i ** k


@given(equigenerated(max_n=3), equigenerated(max_n=3), equigenerated(max_n=3))
def test_product_and_sum_associative(a, b, c):
    if not a.n == b.n == c.n:
        return
    assert (a * b) * c == a * (b * c)
    assert (a + b) + c == a + (b + c)
    assert set((a + b).generators) == minimal(a.generators + b.generators)


@given(equigenerated())
def test_minimalize_idempotent(i):
    assert minimalize(i.n, i.generators) == i
    assert ideal_sum(i, i) == i


@given(equigenerated(max_n=3, max_d=2), st.integers(1, 3), st.integers(2, 3))
def test_frobenius_commutes_with_powers(i, q, k):
    assert pseudo_frobenius_power(ideal_power(i, k), q) == ideal_power(pseudo_frobenius_power(i, q), k)


@given(equigenerated(), st.integers(1, 4))
def test_primitive_root(i, q):
    root, q0 = frobenius_primitive_root(i)
    assert pseudo_frobenius_power(root, q0) == i
    r2, q2 = frobenius_primitive_root(pseudo_frobenius_power(i, q))
    assert r2 == root and q2 == q * q0


@given(equigenerated())
def test_height_matches_hitting_set(i):
    assert height(i) == hitting_height(i.generators, i.n)
    assert height(pure_powers(i.n, 2)) == i.n


def test_hash_and_eq():
    a = MonomialIdeal(2, [(1, 1), (2, 0)])
    b = MonomialIdeal(2, [(2, 0), (1, 1), (3, 0)])
    assert a == b and hash(a) == hash(b)
    assert a != MonomialIdeal(3, [(1, 1, 0), (2, 0, 0)])
