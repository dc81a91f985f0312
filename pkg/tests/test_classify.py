from __future__ import annotations

from itertools import product

import pytest

from freiman import (
    InvalidArgument,
    MonomialIdeal,
    UnsupportedInput,
    delta,
    frobenius_primitive_root,
    ideal_product,
    reduction_step_test,
)
from freiman.classify import (
    MaxHeightVerdict,
    NormalForm,
    classify_max_height,
    normal_form_ideal,
    product_freiman_max_height,
    two_var_power_ideal,
    two_var_power_product,
)
from freiman.errors import InternalInvariantError
from freiman.ideal import maximal_ideal_power, pseudo_frobenius_power, pure_powers
from freiman.search import EnumerationOptions, enumerate_equigenerated
from oracles import brute_delta, hitting_height


@pytest.mark.parametrize("n, d", [(2, 2), (2, 3), (3, 2), (3, 3), (4, 2)])
def test_classifier_agrees_with_delta(n, d):
    seen = 0
    for i in enumerate_equigenerated(n, d, EnumerationOptions(height_max=True)):
        assert hitting_height(i.generators, n) == n
        v = classify_max_height(i)
        dlt = brute_delta(i.generators)[0]
        assert v.freiman == (dlt == 0) == reduction_step_test(i, pure_powers(n, d))
        if v.freiman and v.form.kind == "mixed-block":
            root, q = frobenius_primitive_root(i)
            assert q * v.form.degree == d
            assert root.relabel(v.relabeling) == normal_form_ideal(n, v.form.r, v.form.degree)
        seen += 1
    assert seen > 0


@pytest.mark.slow
def test_classifier_agrees_four_vars_degree3():
    for i in enumerate_equigenerated(4, 3, EnumerationOptions(height_max=True, up_to_symmetry=True)):
        assert classify_max_height(i).freiman == delta(i).freiman


def test_normal_forms():
    assert normal_form_ideal(3, 0, 2) == pure_powers(3, 2)
    assert normal_form_ideal(3, 3, 2) == maximal_ideal_power(3, 2)
    mixed = normal_form_ideal(3, 2, 2)
    assert set(mixed.generators) == {(2, 0, 0), (1, 1, 0), (0, 2, 0), (0, 0, 2)}
    with pytest.raises(InvalidArgument):
        normal_form_ideal(3, 4, 2)


def test_classify_examples():
    v = classify_max_height(pure_powers(3, 4))
    assert v.freiman and v.form == NormalForm("pure-powers", 0, 4) and v.primitive_q == 4
    v = classify_max_height(maximal_ideal_power(3, 1))
    assert v.form.kind == "maximal-ideal"
    scrambled = MonomialIdeal(3, [(2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 0, 1)])
    v = classify_max_height(pseudo_frobenius_power(scrambled, 2))
    assert v.freiman and v.form == NormalForm("mixed-block", 2, 2) and v.primitive_q == 2
    assert v.to_dict()["relabeling"] == [1, 3, 2]
    j = MonomialIdeal(3, [(2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 0), (1, 0, 1)])
    assert classify_max_height(j) == MaxHeightVerdict(False, 1)


def test_classify_rejects():
    with pytest.raises(InvalidArgument):
        classify_max_height(MonomialIdeal(3, [(2, 0, 0), (0, 2, 0)]))
    with pytest.raises(UnsupportedInput):
        classify_max_height(MonomialIdeal(2, [(1, 0), (0, 2)]))
    with pytest.raises(InternalInvariantError):
        MaxHeightVerdict(False, 1, NormalForm("pure-powers", 0, 2))
    with pytest.raises(InternalInvariantError):
        MaxHeightVerdict(True, 1, NormalForm("mixed-block", 3, 3))


def test_degree3_mixed_block_limit():
    # (x1,x2,x3)^3 is not Freiman, but a 2-block of degree 3 is
    assert not classify_max_height(maximal_ideal_power(3, 3)).freiman
    assert classify_max_height(normal_form_ideal(3, 2, 3)).freiman


def test_products_three_vars():
    hits = []
    for d1, d2 in product((1, 2), repeat=2):
        pool = list(enumerate_equigenerated(3, d1, EnumerationOptions(height_max=True)))
        pool2 = list(enumerate_equigenerated(3, d2, EnumerationOptions(height_max=True)))
        for i in pool:
            for j in pool2:
                ok, _ = product_freiman_max_height(i, j)
                assert ok == (brute_delta(ideal_product(i, j).generators)[0] == 0)
                if ok:
                    hits.append((i, j))
    assert all(i == j and i == pure_powers(3, i.generators[0].degree) for i, j in hits)
    assert len(hits) == 2


def test_products_other_ambients():
    m = maximal_ideal_power(4, 1)
    assert product_freiman_max_height(m, m) == (False, product_freiman_max_height(m, m)[1])
    assert not product_freiman_max_height(pure_powers(4, 1), pure_powers(4, 1))[0]
    with pytest.raises(UnsupportedInput):
        product_freiman_max_height(pure_powers(2, 1), pure_powers(2, 1))
    with pytest.raises(InvalidArgument):
        product_freiman_max_height(pure_powers(3, 1), pure_powers(4, 1))


@pytest.mark.parametrize("a, r, b, s", list(product(range(1, 5), repeat=4)))
def test_two_var_products(a, r, b, s):
    actual = ideal_product(two_var_power_ideal(a, r), two_var_power_ideal(b, s))
    got = two_var_power_product(a, r, b, s)
    matches = [(c, t) for c in range(1, 5) for t in range(1, 25)
               if actual.generators[0].degree == c * t and two_var_power_ideal(c, t) == actual]
    if got is None:
        assert matches == []
    else:
        assert got in matches


def test_two_var_argument_check():
    with pytest.raises(InvalidArgument):
        two_var_power_product(0, 1, 1, 1)
