"""Exact integer / rational matrix algebra on lists of lists.

Matrices are plain ``list[list[int]]`` (row-major); nothing here touches
floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

IntMat = list[list[int]]


def identity(n: int) -> IntMat:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(a: IntMat) -> IntMat:
    return [list(row) for row in zip(*a)]


def matmul(a, b):
    if not a:
        return []
    bt = list(zip(*b)) if b else []
    if not bt:
        return [[] for _ in a]
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def diagonal(entries) -> IntMat:
    entries = list(entries)
    n = len(entries)
    return [[entries[i] if i == j else 0 for j in range(n)] for i in range(n)]


def block_diagonal(*blocks) -> IntMat:
    n = sum(len(b) for b in blocks)
    out = [[0] * n for _ in range(n)]
    off = 0
    for b in blocks:
        k = len(b)
        for i in range(k):
            out[off + i][off:off + k] = list(b[i])
        off += k
    return out


def is_symmetric(a) -> bool:
    return all(a[i][j] == a[j][i] for i in range(len(a)) for j in range(i))


@dataclass(frozen=True)
class SnfResult:
    """``U @ A @ V == D`` with U, V unimodular; Uinv, Vinv are their inverses."""

    U: IntMat
    D: IntMat
    V: IntMat
    Uinv: IntMat
    Vinv: IntMat

    @property
    def diagonal(self) -> list[int]:
        return [self.D[i][i] for i in range(min(len(self.D), len(self.D[0]) if self.D else 0))]


def smith_normal_form(a) -> SnfResult:
    """Smith normal form with transforms.

    Pivoting always picks the nonzero entry of least absolute value (first in
    row-major order), so the transforms are deterministic.
    """
    m = len(a)
    n = len(a[0]) if m else 0
    D = [list(map(int, row)) for row in a]
    U, Uinv = identity(m), identity(m)
    V, Vinv = identity(n), identity(n)

    def swap_rows(i, j):
        if i != j:
            D[i], D[j] = D[j], D[i]
            U[i], U[j] = U[j], U[i]
            for row in Uinv:
                row[i], row[j] = row[j], row[i]

    def swap_cols(i, j):
        if i != j:
            for row in D:
                row[i], row[j] = row[j], row[i]
            for row in V:
                row[i], row[j] = row[j], row[i]
            Vinv[i], Vinv[j] = Vinv[j], Vinv[i]

    def add_row(dst, src, k):
        # row_dst += k * row_src
        if k:
            D[dst] = [x + k * y for x, y in zip(D[dst], D[src])]
            U[dst] = [x + k * y for x, y in zip(U[dst], U[src])]
            for row in Uinv:
                row[src] -= k * row[dst]

    def add_col(dst, src, k):
        # col_dst += k * col_src
        if k:
            for row in D:
                row[dst] += k * row[src]
            for row in V:
                row[dst] += k * row[src]
            Vinv[src] = [x - k * y for x, y in zip(Vinv[src], Vinv[dst])]

    def negate_row(i):
        D[i] = [-x for x in D[i]]
        U[i] = [-x for x in U[i]]
        for row in Uinv:
            row[i] = -row[i]

    for t in range(min(m, n)):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if D[i][j] and (best is None or abs(D[i][j]) < abs(D[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            piv = D[t][t]
            for i in range(t + 1, m):
                add_row(i, t, -(D[i][t] // piv))
            for j in range(t + 1, n):
                add_col(j, t, -(D[t][j] // piv))
            rest = [(abs(D[i][t]), i, t) for i in range(t + 1, m) if D[i][t]]
            rest += [(abs(D[t][j]), t, j) for j in range(t + 1, n) if D[t][j]]
            if rest:
                _, i, j = min(rest)
                swap_rows(t, i)
                swap_cols(t, j)
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if D[i][j] % piv), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if D[t][t] < 0:
            negate_row(t)
    return SnfResult(U, D, V, Uinv, Vinv)


def det(a) -> int:
    """Exact determinant (fraction-free Bareiss elimination)."""
    n = len(a)
    if n == 0:
        return 1
    M = [list(map(int, row)) for row in a]
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if M[i][k]), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def inverse_rational(a) -> list[list[Fraction]]:
    n = len(a)
    M = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(a)]
    for c in range(n):
        piv = next((r for r in range(c, n) if M[r][c] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        M[c], M[piv] = M[piv], M[c]
        inv = 1 / M[c][c]
        M[c] = [x * inv for x in M[c]]
        for r in range(n):
            if r != c and M[r][c] != 0:
                f = M[r][c]
                M[r] = [x - f * y for x, y in zip(M[r], M[c])]
    return [row[n:] for row in M]


def signature(g) -> tuple[int, int]:
    """(positive, negative) inertia of a nonsingular symmetric matrix.

    Lagrange diagonalization over Q; a block with zero diagonal but nonzero
    off-diagonal entry c is split off as the hyperbolic plane [[0,c],[c,0]].
    """
    if not is_symmetric(g):
        raise ValueError("signature needs a symmetric matrix")
    M = [[Fraction(x) for x in row] for row in g]
    pos = neg = 0
    while M:
        n = len(M)
        k = next((i for i in range(n) if M[i][i] != 0), None)
        if k is not None:
            piv = M[k][k]
            if piv > 0:
                pos += 1
            else:
                neg += 1
            keep = [i for i in range(n) if i != k]
            M = [[M[i][j] - M[i][k] * M[k][j] / piv for j in keep] for i in keep]
            continue
        pair = next(((i, j) for i in range(n) for j in range(i + 1, n) if M[i][j] != 0), None)
        if pair is None:
            raise ValueError("degenerate matrix has no signature")
        i, j = pair
        c = M[i][j]
        pos += 1
        neg += 1
        # Schur complement of the block [[0, c], [c, 0]], whose inverse is [[0, 1/c], [1/c, 0]]
        keep = [r for r in range(n) if r not in pair]
        M = [[M[r][s] - (M[r][i] * M[j][s] + M[r][j] * M[i][s]) / c for s in keep]
             for r in keep]
    return pos, neg


def leading_minors(g) -> list[int]:
    return [det([row[:k] for row in g[:k]]) for k in range(1, len(g) + 1)]


def is_positive_definite(g) -> bool:
    if not is_symmetric(g):
        return False
    return all(d > 0 for d in leading_minors(g))


def kernel_mod(a, moduli, ambient) -> list[tuple[int, ...]]:
    """Generators of {x in (+) Z/ambient_i : sum_i a[j][i] x_i = 0 mod moduli[j]}.

    The returned set may be redundant; zero vectors are dropped.
    """
    n = len(ambient)
    k = len(a)
    if k == 0:
        return [tuple(int(i == j) % ambient[i] for i in range(n)) for j in range(n)
                if ambient[j] > 1]
    # integer kernel of [a | -diag(moduli)]
    h = [list(a[j]) + [-moduli[j] if i == j else 0 for i in range(k)] for j in range(k)]
    res = smith_normal_form(h)
    rank = sum(1 for d in res.diagonal if d)
    gens = []
    for col in range(rank, n + k):
        v = tuple(res.V[i][col] % ambient[i] for i in range(n))
        if any(v) and v not in gens:
            gens.append(v)
    return gens


def subgroup_presentation(orders, gens) -> tuple[list[int], list[tuple[int, ...]]]:
    """Independent cyclic generators for the subgroup of (+) Z/orders_i spanned
    by ``gens``: returns (new_orders, new_gens), new_orders >= 2 and
    increasing along the divisibility chain."""
    n = len(orders)
    if n == 0:
        return [], []
    cols = [list(g) for g in gens] + [[orders[i] if i == j else 0 for i in range(n)]
                                       for j in range(n)]
    gen_mat = transpose(cols)
    res = smith_normal_form(gen_mat)
    dvals = res.diagonal
    # basis of the preimage lattice: columns of Uinv @ diag(dvals)
    basis = [[res.Uinv[i][j] * dvals[j] for j in range(n)] for i in range(n)]
    # coordinates of orders_j * e_j in that basis
    c = [[res.U[i][j] * orders[j] // dvals[i] for j in range(n)] for i in range(n)]
    assert all(res.U[i][j] * orders[j] % dvals[i] == 0 for i in range(n) for j in range(n))
    res2 = smith_normal_form(c)
    new_basis = matmul(basis, res2.Uinv)
    new_orders, new_gens = [], []
    for i, d in enumerate(res2.diagonal):
        if d > 1:
            new_orders.append(d)
            new_gens.append(tuple(new_basis[r][i] % orders[r] for r in range(n)))
    return new_orders, new_gens


def random_unimodular(n: int, rng, steps: int = 12, span: int = 3) -> IntMat:
    """A random matrix in GL_n(Z) built from elementary operations."""
    t = identity(n)
    if n < 2:
        return [[rng.choice((-1, 1))]] if n else []
    for _ in range(steps):
        i, j = rng.sample(range(n), 2)
        k = rng.randint(-span, span)
        t[i] = [x + k * y for x, y in zip(t[i], t[j])]
    return t
