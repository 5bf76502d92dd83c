import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _support import random_module
from fqm.jordan import (
    best_pair,
    decompose_odd,
    decompose_two,
    jordan_decomposition,
    reconstruct,
    standard_presentation,
)
from fqm.module import (
    ZERO,
    Component,
    DegenerateModuleError,
    Fqm,
    a_class,
    direct_sum,
    make_A,
    make_Am,
    make_B,
    make_C,
    make_D,
    primary_decomposition,
)
from fqm.oracle import invariants_match, iso_oracle


def test_standard_presentation():
    m = make_A(3, 2, 1)
    assert standard_presentation(m, 3) == m
    three = primary_decomposition(make_Am(45))[0][1]
    std = standard_presentation(three, 3)
    assert std.orders == (9,) and iso_oracle(std, three)
    assert standard_presentation(make_B(2), 2).orders == (4, 4)
    mixed = direct_sum(make_A(3, 1, 1), make_A(3, 2, 1))
    assert standard_presentation(mixed, 3).orders == (9, 3)
    with pytest.raises(ValueError):
        standard_presentation(make_Am(15), 3)


def test_best_pair_examples():
    assert best_pair(make_A(3, 1, 1))[:3] == (0, 0, 1)
    choice = best_pair(make_C(1))
    assert choice.i != choice.j and choice.beta == 1 and choice.defect == 1
    std = standard_presentation(direct_sum(make_A(3, 1, 1), make_A(3, 2, 1)), 3)
    choice = best_pair(std)
    assert (choice.i, choice.j, choice.beta) == (0, 0, 2)
    assert std.orders[choice.i] == 9


def test_decompose_odd_nonuniqueness():
    m = Fqm([3, 3], ["1/3", "1/3"])
    comps = decompose_odd(m, 3)
    assert len(comps) == 2 and all(c.p == 3 and c.r == 1 for c in comps)
    assert iso_oracle(reconstruct(comps), m)


def test_decompose_odd_examples():
    assert decompose_odd(make_A(5, 2, 2), 5) == [Component.A(5, 2, 2)]
    m = direct_sum(make_A(3, 1, 1), make_A(3, 2, 1))
    comps = decompose_odd(m, 3)
    assert sorted(c.r for c in comps) == [1, 2]
    assert iso_oracle(reconstruct(comps), m)
    with pytest.raises(ValueError):
        decompose_odd(make_A(2, 1, 1), 2)


def test_decompose_two_examples():
    assert decompose_two(make_C(2)) == [Component.C(2)]
    m = direct_sum(make_B(1), make_A(2, 1, 1))
    comps = decompose_two(m)
    assert iso_oracle(reconstruct(comps), m)
    assert decompose_two(make_D(2, 1, 1, 1)) == [Component.B(2)]
    assert decompose_two(make_D(2, 2, 3, 1)) == [Component.C(2)]


def test_jordan_examples():
    assert jordan_decomposition(ZERO) == []
    assert jordan_decomposition(make_Am(15)) == [Component.A(3, 1, 2), Component.A(5, 1, 2)]
    assert jordan_decomposition(make_B(1)) == [Component.B(1)]
    with pytest.raises(DegenerateModuleError):
        jordan_decomposition(make_D(1, 1, 2, 1, check=False))


def _check_components(comps):
    for c in comps:
        if c.tag == "A":
            assert c.a == a_class(c.p, c.r, c.a)
        else:
            assert c.p == 2 and c.a is None


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_reconstruction(seed):
    _, m = random_module(random.Random(seed), 1000)
    comps = jordan_decomposition(m)
    _check_components(comps)
    rebuilt = reconstruct(comps)
    assert rebuilt.elementary_divisors() == m.elementary_divisors()
    assert rebuilt.sigma_exact() == m.sigma_exact()
    assert rebuilt.histogram() == m.histogram()
    assert iso_oracle(rebuilt, m)


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10**6))
def test_reconstruction_large(seed):
    # beyond the oracle budget, invariants still have to agree
    _, m = random_module(random.Random(seed), 10**5)
    assert invariants_match(reconstruct(jordan_decomposition(m)), m)


def test_component_order_product():
    m = direct_sum(make_B(2), make_C(1), make_A(2, 3, 5), make_A(7, 1, 3))
    comps = jordan_decomposition(m)
    assert sorted((c.tag, c.r) for c in comps if c.p == 2) == [("A", 3), ("B", 2), ("C", 1)]
    assert iso_oracle(reconstruct(comps), m, budget=5000)
