import cmath
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _support import as_fraction_counter, discriminant_histogram
from fqm.lattice import (
    Lattice,
    OddLatticeError,
    discriminant_module,
    is_even,
    lattice_direct_sum,
    milgram_check,
    sign_mod8,
    signature,
)
from fqm.module import direct_sum, make_A, make_C
from fqm.oracle import iso_oracle
from fqm.qz import QZ
from fqm.realize import f_chain
from fqm.zmatrix import inverse_rational, matmul, random_unimodular, transpose


def test_lattice_validation():
    with pytest.raises(ValueError):
        Lattice([[1, 2], [3, 4]])
    with pytest.raises(ValueError):
        Lattice([[1, 1], [1, 1]])
    assert Lattice([]).rank == 0
    assert Lattice.from_json({"gram": [[2]]}).to_json() == {"gram": [[2]]}


def test_is_even():
    assert is_even(Lattice([[2, 1], [1, 2]]))
    assert not is_even(Lattice([[1]]))
    assert is_even(Lattice([[0, 2], [2, 0]]))


def test_discriminant_examples():
    a3 = discriminant_module(Lattice([[2, 1], [1, 2]]))
    assert a3.orders == (3,) and a3.q == (QZ(1, 3),)
    assert iso_oracle(discriminant_module(Lattice([[0, 2], [2, 0]])), make_C(1))
    a2 = discriminant_module(Lattice([[2]]))
    assert a2.orders == (2,) and a2.q == (QZ(1, 4),)
    assert discriminant_module(Lattice([])).size == 1
    with pytest.raises(OddLatticeError):
        discriminant_module(Lattice([[1]]))


@pytest.mark.parametrize("gram", [
    [[2, 1], [1, 2]], [[6, 3], [3, 2]], [[4, 2, 0, 0], [2, 4, 2, 0], [0, 2, 2, 1], [0, 0, 1, 2]],
    [[0, 4], [4, 0]], [[-6, 3], [3, -2]], [[2, 1, 0], [1, 4, 1], [0, 1, 6]], [[8]],
])
def test_discriminant_histogram_against_box_count(gram):
    disc = discriminant_module(Lattice(gram))
    assert as_fraction_counter(disc.histogram()) == discriminant_histogram(gram)


def test_signature_and_milgram_examples():
    one = Lattice([[2]])
    assert sign_mod8(one) == 1
    assert abs(discriminant_module(one).sigma_numeric() - cmath.exp(-1j * cmath.pi / 4)) < 1e-12
    assert milgram_check(one)
    a2 = Lattice([[2, 1], [1, 2]])
    assert sign_mod8(a2) == 2 and milgram_check(a2)
    hyp = Lattice([[0, 2], [2, 0]])
    assert signature(hyp) == (1, 1) and sign_mod8(hyp) == 0 and milgram_check(hyp)
    with pytest.raises(OddLatticeError):
        milgram_check(Lattice([[1]]))


def test_direct_sum_examples():
    l = Lattice([[2, 1], [1, 2]])
    assert lattice_direct_sum(l, Lattice([])) == l
    s = lattice_direct_sum(Lattice([[2]]), Lattice([[-2]]))
    assert s.gram == ((2, 0), (0, -2)) and sign_mod8(s) == 0
    f2 = Lattice(f_chain(2))
    disc = discriminant_module(lattice_direct_sum(f2, f2))
    assert iso_oracle(disc, direct_sum(make_A(3, 1, 1), make_A(3, 1, 1)))


def random_even_lattice(rng, n):
    while True:
        g = [[0] * n for _ in range(n)]
        for i in range(n):
            g[i][i] = 2 * rng.randint(-3, 4)
            for j in range(i):
                g[i][j] = g[j][i] = rng.randint(-3, 3)
        try:
            lat = Lattice(g)
        except ValueError:
            continue
        if 0 < abs(lat.det) <= 400:
            return lat


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4), st.integers(0, 10**6))
def test_random_lattice_laws(n, seed):
    rng = random.Random(seed)
    lat = random_even_lattice(rng, n)
    disc = discriminant_module(lat)
    assert disc.size == abs(lat.det)
    assert milgram_check(lat)
    t = random_unimodular(n, rng)
    moved = Lattice(matmul(matmul(transpose(t), lat.matrix()), t))
    assert iso_oracle(discriminant_module(moved), disc)
    # the inverse of the dual Gram matrix is the original Gram matrix
    assert inverse_rational(inverse_rational(lat.matrix())) == lat.matrix()
