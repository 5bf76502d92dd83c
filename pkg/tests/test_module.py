import cmath
import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _support import gauss_sum, q_histogram_naive, random_module
from fqm.module import (
    ZERO,
    BudgetExceeded,
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
    normalize_D,
    primary_decomposition,
    scramble,
    subgroup_elements,
)
from fqm.oracle import iso_oracle
from fqm.qz import QZ, Mu8


def test_constructors():
    a = make_A(3, 1, 1)
    assert a.orders == (3,) and a.q == (QZ(1, 3),)
    a2 = make_A(2, 1, 1)
    assert a2.orders == (2,) and a2.q == (QZ(1, 4),)
    c = make_C(1)
    assert c.orders == (2, 2) and c.q == (QZ(), QZ()) and c.b[0][1] == QZ(1, 2)
    assert make_A(5, 2, -3).q == (QZ(22, 25),)
    assert make_Am(1) == ZERO
    assert make_Am(6).q == (QZ(1, 12),)
    assert make_Am(15).q == (QZ(1, 15),)


def test_constructor_errors():
    with pytest.raises(ValueError):
        make_A(3, 1, 6)
    with pytest.raises(ValueError):
        make_D(1, 1, 2, 1)
    with pytest.raises(DegenerateModuleError):
        Fqm([4], ["1/4"])  # B(e, e) = 1/2 pairs 2e to zero
    with pytest.raises(ValueError):
        Fqm([3], ["1/9"])  # not well defined on Z/3
    with pytest.raises(ValueError):
        Fqm([2, 2], ["1/4", "1/4"], [["1/2", "1/3"], ["1/3", "1/2"]])


def test_evaluation():
    b = make_B(1)
    assert b.Q((1, 1)) == QZ(1, 2)
    assert b.Q((0, 0)) == 0
    assert make_A(3, 1, 1).Q((2,)) == QZ(1, 3)
    assert b.B((1, 0), (0, 1)) == QZ(1, 2)
    with pytest.raises(ValueError):
        b.Q((1,))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_polarization(seed):
    rng = random.Random(seed)
    _, m = random_module(rng, 300)
    for _ in range(10):
        x = [rng.randrange(d) for d in m.orders]
        y = [rng.randrange(d) for d in m.orders]
        s = [a + b for a, b in zip(x, y)]
        assert m.B(x, y) == m.Q(s) - m.Q(x) - m.Q(y)
        assert m.Q([2 * c for c in x]) == 4 * m.Q(x)


def test_direct_sum():
    m = make_B(2)
    assert direct_sum(m, ZERO) == m
    s = direct_sum(make_A(3, 1, 1), make_A(5, 1, 1))
    assert s.orders == (3, 5) and s.b[0][1] == 0 and s.size == 15
    assert s.sigma_exact() == make_A(3, 1, 1).sigma_exact() * make_A(5, 1, 1).sigma_exact()


def test_radical():
    assert make_B(2).radical() == []
    assert make_D(1, 1, 2, 1, check=False).radical() != []
    assert not make_D(1, 1, 2, 1, check=False).is_nondegenerate()
    assert ZERO.radical() == [] and ZERO.is_nondegenerate()


def test_orthogonal_complement_examples():
    m = direct_sum(make_A(3, 1, 1), make_A(3, 1, 1))
    sub, embed = m.orthogonal_complement([(1, 1)])
    assert sub.size == 3
    assert subgroup_elements(m.orders, embed) == {(0, 0), (1, 2), (2, 1)}
    assert m.Q((1, 2)) == QZ(2, 3)
    full, _ = m.orthogonal_complement([])
    assert iso_oracle(full, m)
    none, _ = m.orthogonal_complement(m.basis())
    assert none.size == 1


def test_primary_decomposition():
    parts = primary_decomposition(make_Am(15))
    assert [p for p, _ in parts] == [3, 5]
    # A_15 splits as A_3^{M1} + A_5^{M2} with 5 M1 + 3 M2 = 1, M1 = 2, M2 = -3
    assert iso_oracle(parts[0][1], make_A(3, 1, 2))
    assert iso_oracle(parts[1][1], make_A(5, 1, -3))
    assert [p for p, _ in primary_decomposition(make_B(2))] == [2]
    assert primary_decomposition(ZERO) == []


def test_sigma_examples():
    for r in range(1, 4):
        assert make_C(r).sigma_exact() == Mu8(0)
    assert make_B(1).sigma_exact() == Mu8(4)
    assert abs(make_A(3, 1, 1).sigma_numeric() - (-1j)) < 1e-12
    expected = (1 + 2 * cmath.exp(-2j * cmath.pi / 3)) / 3**0.5
    assert abs(make_A(3, 1, 1).sigma_numeric() - expected) < 1e-12
    assert ZERO.sigma_exact() == Mu8(0) and abs(ZERO.sigma_numeric() - 1) < 1e-15
    with pytest.raises(BudgetExceeded):
        make_A(3, 7, 1).sigma_numeric(budget=100)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_sigma_exact_matches_numeric(seed):
    _, m = random_module(random.Random(seed), 10**4)
    assert abs(m.sigma_numeric() - complex(m.sigma_exact())) < 1e-9


def test_sigma_numeric_matches_plain_sum():
    for m in (make_A(5, 1, 2), make_B(2), direct_sum(make_A(2, 2, 3), make_C(1))):
        assert abs(m.sigma_numeric() - gauss_sum(m)) < 1e-12


def test_histogram_examples():
    assert make_B(1).histogram() == {QZ(): 1, QZ(1, 2): 3}
    assert make_C(1).histogram() == {QZ(): 3, QZ(1, 2): 1}
    assert ZERO.histogram() == {QZ(): 1}
    for r in range(1, 4):
        # 4^r - 4^(r-1) elements of B(2^r) have Q of full order, only 4^(r-1) for C
        def full(h):
            return sum(v for k, v in h.items() if k.den == 2**r)

        assert full(make_B(r).histogram()) == 4**r - 4 ** (r - 1)
        assert full(make_C(r).histogram()) == 4 ** (r - 1)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_histogram_matches_naive(seed):
    _, m = random_module(random.Random(seed), 400)
    assert m.histogram() == dict(q_histogram_naive(m))


@pytest.mark.parametrize("args, expected", [
    ((1, 1, 1, 1), Component.B(1)),
    ((3, 0, 1, 0), Component.C(3)),
    ((2, 2, 3, 1), Component.C(2)),
])
def test_normalize_D(args, expected):
    assert normalize_D(*args) == expected
    r, a, b, c = args
    assert iso_oracle(make_D(r, a, b, c), expected.module())


def test_normalize_D_rejects_even_b():
    with pytest.raises(ValueError):
        normalize_D(1, 1, 2, 1)


@pytest.mark.parametrize("p, r, a, expected", [(3, 1, 7, 1), (2, 3, 11, 3), (2, 1, 5, 1),
                                               (7, 2, 5, 3), (5, 1, -1, 1), (2, 2, -1, 7)])
def test_a_class(p, r, a, expected):
    assert a_class(p, r, a) == expected
    assert iso_oracle(make_A(p, r, a), make_A(p, r, expected))


def test_a_class_rejects_noncoprime():
    with pytest.raises(ValueError):
        a_class(3, 1, 6)


def test_component_json_roundtrip():
    for c in (Component.A(3, 2, 2), Component.B(1), Component.C(3)):
        assert Component.from_json(c.to_json()) == c
    assert Component.A(3, 2, 5).to_json() == {"tag": "A", "p": 3, "r": 2, "a": 2}
    with pytest.raises(ValueError):
        Component.from_json({"tag": "E", "r": 1})
    with pytest.raises(ValueError):
        Component("A", 1, 3, 5)


def test_fqm_json_roundtrip():
    m = direct_sum(make_B(1), make_A(3, 1, 2))
    assert Fqm.from_json(m.to_json()) == m
    assert make_C(1).to_json() == {"orders": [2, 2], "q": ["0/1", "0/1"],
                                   "b": [["0/1", "1/2"], ["1/2", "0/1"]]}
    with pytest.raises(ValueError):
        Fqm.from_json({"orders": [3]})


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_constructor_invariants(seed):
    comps, m = random_module(random.Random(seed), 2000)
    for i in range(m.rank):
        assert m.b[i][i] == 2 * m.q[i]
        assert m.orders[i] ** 2 * m.q[i] == 0
        assert m.orders[i] * m.b[i][i] == 0
        for j in range(m.rank):
            assert m.b[i][j] == m.b[j][i]
            assert math.gcd(m.orders[i], m.orders[j]) % m.b[i][j].order == 0
    assert m.is_nondegenerate()
    assert m.size == math.prod(c.order for c in comps)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_scramble_preserves_module(seed):
    rng = random.Random(seed)
    _, m = random_module(rng, 500, scrambled=False)
    s = scramble(m, rng)
    assert s.orders == m.orders
    assert iso_oracle(s, m)
