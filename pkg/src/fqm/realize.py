"""Explicit even lattices whose discriminant module is a given module.

Every constructor is certified when it runs: the Gram matrix must be even
and nonsingular, its discriminant module must match the target (by the
brute-force oracle when small enough, by invariants otherwise), and
positive-definite constructions must pass the leading-minor test.
"""

from __future__ import annotations

from .lattice import Lattice, discriminant_module, lattice_direct_sum
from .module import Component, Fqm
from .numtheory import find_prime, kronecker, solve_quad_congruence
from .oracle import NO, UNKNOWN, iso_oracle, invariants_match
from .zmatrix import det


class RealizationError(ArithmeticError):
    """An auxiliary quantity of a construction failed to exist or be integral."""


def f_chain(length: int) -> list[list[int]]:
    """Tridiagonal matrix with 2 on the diagonal and 1 beside it."""
    if length < 1:
        raise ValueError("chain length must be positive")
    return [[2 if i == j else int(abs(i - j) == 1) for j in range(length)]
            for i in range(length)]


def _exact(num: int, den: int) -> int:
    if num % den:
        raise RealizationError(f"{num}/{den} is not an integer")
    return num // den


def _solve(c: int, rhs: int, m: int) -> int:
    v = solve_quad_congruence(c, rhs, m)
    if v is None:
        raise RealizationError(f"{c} v^2 = {rhs} mod {m} has no solution")
    return v


def _head_and_tail(head, link: int, tail) -> list[list[int]]:
    """Block matrix: a 2x2 ``head`` joined to ``tail`` by ``link``.

    ``link`` sits between the second head row and the first tail row.
    """
    n = 2 + len(tail)
    g = [[0] * n for _ in range(n)]
    for i in range(2):
        g[i][:2] = head[i]
    for i, row in enumerate(tail):
        g[2 + i][2:] = row
    g[1][2] = g[2][1] = link
    return g


def _tail(first: int, length: int) -> list[list[int]]:
    """F_length with its first diagonal entry replaced by ``first``."""
    t = f_chain(length)
    t[0][0] = first
    return t


# -- even, indefinite allowed ------------------------------------------------

def _odd_rank2_split(p: int, r: int) -> list[list[int]]:
    pp = p**r
    return [[2 * pp, pp], [pp, (pp - kronecker(-1, p) ** r) // 2]]


def _odd_rank4(p: int, r: int) -> list[list[int]]:
    pp = p**r
    q = find_prime([(2, 3)], [(p, -1)])
    shift = _exact(4 * q + 1, 3)
    v = _solve(pp, -shift, 4 * q)
    x = _exact(pp * v * v + shift, 4 * q)
    return [[2 * q * pp, pp * v, 0, 0],
            [pp * v, 2 * x, 1, 0],
            [0, 1, 2, 1],
            [0, 0, 1, 2]]


def _even_A_odd(p: int, r: int, a: int) -> list[list[int]]:
    pp = p**r
    if kronecker(a, p) == 1:
        return _odd_rank2_split(p, r)
    if r % 2 == 0:
        q = find_prime([], [(p, -1)])
        v = _solve(pp, 1, 4 * q)
        return [[2 * q * pp, pp * v], [pp * v, _exact(pp * v * v - 1, 2 * q)]]
    if p % 4 == 3:
        return [[-2 * pp, pp], [pp, -(pp + 1) // 2]]
    return _odd_rank4(p, r)


def _even_A_two(r: int, a: int) -> list[list[int]]:
    n = 2**r
    if r == 1:
        return [[2]] if a % 4 == 1 else [[-2]]
    if a % 8 == 1:
        return [[n]]
    if a % 8 == 7:
        return [[-n]]
    eps = 1 if a % 8 == 5 else -1
    half = 2 ** (r - 1)
    if r % 2:
        v = _solve(half, -eps, 5)
        x = _exact(half * v * v + eps, 5)
        return [[5 * eps * n, n * v, 0], [n * v, 2 * eps * x, 1], [0, 1, 2]]
    v = _solve(half, -1, 3)
    x = _exact(half * v * v + 1, 3)
    return [[-3 * eps * n, n * v, 0], [n * v, -2 * eps * x, 1], [0, 1, -2 * eps]]


def _even_B(r: int) -> list[list[int]]:
    n = 2**r
    eps = (-1) ** (r + 1)
    v = _solve(n, -eps, 3)
    x = _exact(n * v * v + eps, 3)
    return [[2 * n, n, 0, 0],
            [n, 2 * n, n * v, 0],
            [0, n * v, 2 * x, 1],
            [0, 0, 1, 2 * eps]]


def _even_C(r: int) -> list[list[int]]:
    return [[0, 2**r], [2**r, 0]]


def _even_gram(c: Component) -> list[list[int]]:
    if c.tag == "B":
        return _even_B(c.r)
    if c.tag == "C":
        return _even_C(c.r)
    if c.p == 2:
        return _even_A_two(c.r, c.a)
    return _even_A_odd(c.p, c.r, c.a)


# -- positive definite -------------------------------------------------------

def _posdef_odd_eight(p: int, r: int, a: int) -> list[list[int]]:
    pp = p**r
    q = find_prime([(4, 7)], [(p, kronecker(a, p))])
    v = _solve(7 * pp, -1, 4 * q)
    x = _exact(7 * pp * v * v + 12 * q + 1, 28 * q)
    return _head_and_tail([[2 * q * pp, pp * v], [pp * v, 2 * x]], 1, f_chain(6))


def _posdef_A_odd(p: int, r: int, a: int) -> list[list[int]]:
    pp = p**r
    chi = kronecker(a, p)
    if r % 2 == 0:
        if p != 7:
            return _posdef_odd_eight(p, r, a)
        if chi == 1:
            v = _solve(7 ** (r - 1), -1, 16)
            x = _exact(pp * v * v + 7, 16)
            return _head_and_tail([[8 * pp, pp * v], [pp * v, 2 * x]], 1, f_chain(6))
        v = _solve(pp, 1, 20)
        x = _exact(pp * v * v + 79, 20)
        return _head_and_tail([[10 * pp, pp * v], [pp * v, 2 * x]], 5, _tail(4, 6))
    if kronecker(-1, p) == 1:
        return _posdef_odd_eight(p, r, a) if chi == 1 else _odd_rank4(p, r)
    if chi == 1:
        return _odd_rank2_split(p, r)
    q = find_prime([(3, 5)], [(p, -1)])
    v = _solve(5 * pp, -1, 4 * q)
    x = _exact(5 * pp * v * v + 8 * q + 1, 20 * q)
    return _head_and_tail([[2 * q * pp, pp * v], [pp * v, 2 * x]], 1, f_chain(4))


def _posdef_two_head(r: int, lead: int, rhs: int, shift: int, link: int, tail):
    """Head [[lead 2^r, 2^r v], [2^r v, 2x]] with 2^(r-1) v^2 = rhs mod lead."""
    n, half = 2**r, 2 ** (r - 1)
    v = _solve(half, rhs, lead)
    x = _exact(half * v * v + shift, lead)
    return _head_and_tail([[lead * n, n * v], [n * v, 2 * x]], link, tail)


def _posdef_A_two(r: int, a: int) -> list[list[int]]:
    if r == 1:
        if a % 4 == 1:
            return [[2]]
        return _posdef_two_head(1, 19, -8, 8, 1, f_chain(5))
    residue = a % 8
    if residue == 1:
        return [[2**r]]
    if residue == 7:
        return _posdef_two_head(r, 7, -3, 3, 1, f_chain(5))
    if r % 2 == 0:
        if residue == 3:
            return _even_A_two(r, a)
        return _posdef_two_head(r, 5, -2, 2, 1, f_chain(3))
    if residue == 3:
        return _posdef_two_head(r, 19, -8, 8, 1, f_chain(5))
    return _posdef_two_head(r, 5, 1, 39, 7, _tail(4, 7))


def _posdef_BC(r: int, second: int, modulus: int, shift: int) -> list[list[int]]:
    n = 2**r
    v = _solve(n, -shift, modulus)
    x = _exact(n * v * v + shift, modulus)
    size = 8
    g = [[0] * size for _ in range(size)]
    g[0][0], g[0][1], g[1][0], g[1][1] = 2 * n, n, n, second * n
    g[1][2] = g[2][1] = n * v
    g[2][2] = 2 * x
    for i in range(3, size):
        g[i][i] = 2
        g[i][i - 1] = g[i - 1][i] = 1
    return g


def _posdef_gram(c: Component) -> list[list[int]]:
    if c.tag == "B":
        return _even_B(c.r) if c.r % 2 else _posdef_BC(c.r, 10, 19, 8)
    if c.tag == "C":
        return _posdef_BC(c.r, 4, 7, 3)
    if c.p == 2:
        return _posdef_A_two(c.r, c.a)
    return _posdef_A_odd(c.p, c.r, c.a)


# -- certification -----------------------------------------------------------

def _certify(gram, c: Component, posdef: bool) -> Lattice:
    lat = Lattice(gram)
    if not lat.is_even():
        raise RealizationError(f"construction for {c} is not even")
    if abs(det(gram)) != c.order:
        raise RealizationError(f"construction for {c} has the wrong determinant")
    if posdef and not lat.is_positive_definite():
        raise RealizationError(f"construction for {c} is not positive definite")
    disc, target = discriminant_module(lat), c.module()
    verdict = iso_oracle(disc, target).verdict
    if verdict == NO or (verdict == UNKNOWN and not invariants_match(disc, target)):
        raise RealizationError(f"discriminant module of the construction is not {c}")
    return lat


def realize_even(c: Component) -> Lattice:
    """Even lattice of least rank with discriminant module c."""
    return _certify(_even_gram(c), c, posdef=False)


def realize_posdef(c: Component) -> Lattice:
    """Positive-definite even lattice of least rank with discriminant module c."""
    return _certify(_posdef_gram(c), c, posdef=True)


def realize_module(m: Fqm, posdef: bool = False) -> Lattice:
    """Block sum of per-component realizations of a Jordan decomposition of m."""
    from .jordan import jordan_decomposition

    build = realize_posdef if posdef else realize_even
    return lattice_direct_sum(*(build(c) for c in jordan_decomposition(m)))


def realize_components(components, posdef: bool = False) -> Lattice:
    build = realize_posdef if posdef else realize_even
    return lattice_direct_sum(*(build(c) for c in components))


# -- rank predictions --------------------------------------------------------

def rank_residue_mod8(c: Component) -> int:
    """Residue mod 8 forced on the rank of a positive-definite realization."""
    r = c.r
    if c.tag == "C":
        return 0
    if c.tag == "B":
        return (2 - 2 * (-1) ** r) % 8
    if c.p == 2:
        if r % 2 == 0:
            return c.a % 8
        return (c.a + 2 - 2 * kronecker(c.a, 2)) % 8
    if r % 2 == 0:
        return 0
    return (3 - kronecker(-1, c.p) - 2 * kronecker(c.a, c.p)) % 8


def expected_min_rank(c: Component, posdef: bool) -> int:
    """Least rank of an (optionally positive-definite) even realization."""
    if c.tag == "B":
        return (4 if c.r % 2 else 8) if posdef else 4
    if c.tag == "C":
        return 8 if posdef else 2
    if c.p == 2:
        if c.r == 1:
            return (1 if c.a % 4 == 1 else 7) if posdef else 1
        if not posdef:
            return 1 if c.a % 8 in (1, 7) else 3
        if c.r % 2 == 0:
            return c.a % 8
        return {1: 1, 3: 7, 5: 9, 7: 7}[c.a % 8]
    if posdef:
        return rank_residue_mod8(c) or 8
    if kronecker(c.a, c.p) == 1 or c.r % 2 == 0 or c.p % 4 == 3:
        return 2
    return 4


# -- the S-factorization test ------------------------------------------------

def verify_form_conditions(lat: Lattice, c: Component) -> bool:
    """Whether the given basis exhibits G = diag(P, .., P, 1, .., 1) * S.

    P is p^r for A-components (one scaled row) and 2^r for B and C (two
    scaled rows); S must be unimodular and satisfy the parity, symmetry and
    residue conditions characterizing discriminant module c.
    """
    g = lat.gram
    n = lat.rank
    k = 1 if c.tag == "A" else 2
    scale = c.p**c.r
    if n < k or any(g[i][j] % scale for i in range(k) for j in range(n)):
        return False
    s = [[g[i][j] // scale if i < k else g[i][j] for j in range(n)] for i in range(n)]
    if abs(det(s)) != 1:
        return False
    if any(s[i][i] % 2 for i in range(k, n)):
        return False
    if any(s[i][j] != s[j][i] for i in range(k, n) for j in range(k, n)):
        return False
    if any(scale * s[i][j] != s[j][i] for i in range(k) for j in range(k, n)):
        return False
    if c.tag == "A":
        s11 = s[0][0]
        if c.p != 2:
            return s11 % 2 == 0 and kronecker(s11 // 2, c.p) == kronecker(c.a, c.p)
        if s11 % 2 == 0:
            return False
        return (s11 * c.a) % (4 if c.r == 1 else 8) == 1
    prod_ac = 1 if c.tag == "B" else 0
    return (s[0][0] % 2 == 0 and s[1][1] % 2 == 0 and s[0][1] == s[1][0]
            and s[0][1] % 2 == 1 and (s[0][0] * s[1][1] - 4 * prod_ac) % 8 == 0)
