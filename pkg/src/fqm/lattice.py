"""Integral lattices given by Gram matrices, and their discriminant modules."""

from __future__ import annotations

import cmath
from dataclasses import dataclass

from .module import ENUMERATION_BUDGET, BudgetExceeded, Fqm
from .qz import QZ, Mu8
from .zmatrix import block_diagonal, det, is_positive_definite, is_symmetric
from .zmatrix import signature as _signature
from .zmatrix import smith_normal_form


class OddLatticeError(ValueError):
    """A discriminant module was requested for a lattice that is not even."""


@dataclass(frozen=True, init=False)
class Lattice:
    """A nondegenerate symmetric integral Gram matrix."""

    gram: tuple[tuple[int, ...], ...]

    def __init__(self, gram):
        rows = tuple(tuple(int(x) for x in row) for row in gram)
        if any(len(row) != len(rows) for row in rows):
            raise ValueError("Gram matrix must be square")
        if not is_symmetric(rows):
            raise ValueError("Gram matrix must be symmetric")
        if det(rows) == 0:
            raise ValueError("Gram matrix must be nonsingular")
        object.__setattr__(self, "gram", rows)

    @property
    def rank(self) -> int:
        return len(self.gram)

    @property
    def det(self) -> int:
        return det(self.gram)

    def matrix(self) -> list[list[int]]:
        return [list(row) for row in self.gram]

    def is_even(self) -> bool:
        return all(self.gram[i][i] % 2 == 0 for i in range(self.rank))

    def is_positive_definite(self) -> bool:
        return is_positive_definite(self.gram)

    def signature(self) -> tuple[int, int]:
        return _signature(self.gram) if self.rank else (0, 0)

    def sign_mod8(self) -> int:
        pos, neg = self.signature()
        return (pos - neg) % 8

    def discriminant_module(self) -> Fqm:
        return discriminant_module(self)

    def to_json(self) -> dict:
        return {"gram": self.matrix()}

    @classmethod
    def from_json(cls, data: dict) -> Lattice:
        try:
            return cls(data["gram"])
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed lattice JSON: {exc}") from None


def is_even(lat: Lattice) -> bool:
    return lat.is_even()


def discriminant_module(lat: Lattice) -> Fqm:
    """L^#/L with Q(v + L) = B(v, v)/2.

    With U G V = D in Smith form, the dual vectors g_i = V e_i / d_i (in
    lattice coordinates) give independent generators of order d_i, and
    their Gram data is (V^T G V)_ij / (d_i d_j).
    """
    if not lat.is_even():
        raise OddLatticeError("discriminant modules need an even lattice")
    n = lat.rank
    if n == 0:
        return Fqm((), ())
    g = lat.gram
    snf = smith_normal_form(g)
    d = snf.diagonal
    keep = [i for i in range(n) if d[i] > 1]
    V = snf.V
    gv = [[sum(g[r][s] * V[s][c] for s in range(n)) for c in keep] for r in range(n)]
    w = [[sum(V[r][a] * gv[r][jb] for r in range(n)) for jb in range(len(keep))] for a in keep]
    orders = [d[i] for i in keep]
    k = len(keep)
    q = [QZ(w[i][i], 2 * orders[i] ** 2) for i in range(k)]
    b = [[QZ(w[i][j], orders[i] * orders[j]) for j in range(k)] for i in range(k)]
    return Fqm(orders, q, b)


def signature(lat: Lattice) -> tuple[int, int]:
    return lat.signature()


def sign_mod8(lat: Lattice) -> int:
    return lat.sign_mod8()


def milgram_check(lat: Lattice, budget: int = ENUMERATION_BUDGET, tol: float = 1e-9) -> bool:
    """sigma(L^#/L) == exp(-2 pi i sign(L) / 8), exactly and (within budget) numerically."""
    disc = discriminant_module(lat)
    sign = lat.sign_mod8()
    if disc.sigma_exact() != Mu8(-sign):
        return False
    try:
        numeric = disc.sigma_numeric(budget)
    except BudgetExceeded:
        return True
    return abs(numeric - cmath.exp(-2j * cmath.pi * sign / 8)) < tol


def lattice_direct_sum(*lattices: Lattice) -> Lattice:
    return Lattice(block_diagonal(*(lat.gram for lat in lattices)))
