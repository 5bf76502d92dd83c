"""Exhaustive isometry search between small finite quadratic modules."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .module import ENUMERATION_BUDGET, BudgetExceeded, DegenerateModuleError, Fqm

ORACLE_BUDGET = 2000

YES, NO, UNKNOWN = "yes", "no", "unknown"


@dataclass(frozen=True)
class IsoResult:
    """Verdict of :func:`iso_oracle`; ``witness`` lists the images of m1's generators."""

    verdict: str
    witness: tuple[tuple[int, ...], ...] | None = None

    def __bool__(self) -> bool:
        return self.verdict == YES

    def to_json(self) -> dict:
        out = {"isomorphic": self.verdict}
        if self.witness is not None:
            out["witness"] = [list(w) for w in self.witness]
        return out


def _element_orders(elems: np.ndarray, orders) -> np.ndarray:
    if elems.shape[1] == 0:
        return np.ones(len(elems), dtype=np.int64)
    d = np.asarray(orders, dtype=np.int64)
    return np.lcm.reduce(d // np.gcd(elems, d), axis=1)


def _histogram_key(m: Fqm, budget: int):
    return sorted((str(k), v) for k, v in m.histogram(budget).items())


def iso_oracle(m1: Fqm, m2: Fqm, budget: int = ORACLE_BUDGET) -> IsoResult:
    """Search for an isometric isomorphism m1 -> m2.

    Generators of m1 are mapped in order; candidates for e_i are the elements
    of m2 with the same order and Q-value, tried in lexicographic order and
    pruned by the B-values against earlier choices, so the first witness found
    is the lexicographically smallest one.
    """
    if max(m1.size, m2.size) > budget:
        return IsoResult(UNKNOWN)
    if m1.size != m2.size or m1.elementary_divisors() != m2.elementary_divisors():
        return IsoResult(NO)
    if _histogram_key(m1, budget) != _histogram_key(m2, budget):
        return IsoResult(NO)
    if m1.rank == 0:
        return IsoResult(YES, ())

    elems = m2.elements(budget)
    n2, _, bn2 = m2._numerators()
    bn2 = np.asarray(bn2, dtype=np.int64)
    qnum = m2.q_numerators(elems)
    ords = _element_orders(elems, m2.orders)
    d2 = np.asarray(m2.orders, dtype=np.int64)

    def numerator(value) -> int | None:
        return None if n2 % value.den else value.num * (n2 // value.den)

    pools = []
    for i in range(m1.rank):
        target = numerator(m1.q[i])
        if target is None:
            return IsoResult(NO)
        pools.append(elems[(ords == m1.orders[i]) & (qnum == target)])
    targets_b = []
    for i in range(m1.rank):
        row = [numerator(m1.b[i][j]) for j in range(i)]
        if any(t is None for t in row):
            return IsoResult(NO)
        targets_b.append(row)

    elems1 = m1.elements(budget)
    q1 = m1.q_numerators(elems1)
    n1 = m1.denominator

    def verify(images) -> bool:
        w = np.asarray(images, dtype=np.int64)
        img = (elems1 @ w) % d2
        if len(np.unique(img, axis=0)) != m1.size:
            return False
        # Q-values are compared as exact fractions over a common denominator
        return bool(np.all(m2.q_numerators(img) * n1 == q1 * n2))

    chosen: list[np.ndarray] = []
    rows: list[np.ndarray] = []

    def search(i: int) -> bool:
        if i == m1.rank:
            return verify(chosen)
        pool = pools[i]
        for j in range(i):
            if len(pool) == 0:
                break
            pool = pool[(pool @ rows[j]) % n2 == targets_b[i][j]]
        for y in pool:
            chosen.append(y)
            rows.append((bn2 @ y) % n2)
            if search(i + 1):
                return True
            chosen.pop()
            rows.pop()
        return False

    if search(0):
        return IsoResult(YES, tuple(tuple(int(c) for c in y) for y in chosen))
    return IsoResult(NO)


def invariants_match(m1: Fqm, m2: Fqm, budget: int = ENUMERATION_BUDGET) -> bool:
    """Necessary conditions for isometry; False certifies non-isomorphism."""
    if m1.elementary_divisors() != m2.elementary_divisors():
        return False
    try:
        if m1.sigma_exact() != m2.sigma_exact():
            return False
    except DegenerateModuleError:
        return False
    try:
        return _histogram_key(m1, budget) == _histogram_key(m2, budget)
    except BudgetExceeded:
        return True


def apply_witness(m1: Fqm, m2: Fqm, witness, x) -> tuple[int, ...]:
    """Image in m2 of the element x of m1 under a generator-image witness."""
    x = m1.reduce(x)
    return m2.reduce([sum(c * w[k] for c, w in zip(x, witness)) for k in range(m2.rank)])
