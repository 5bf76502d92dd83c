"""Jordan decomposition of finite quadratic modules into A, B and C pieces.

Each p-primary part is put on a descending cyclic presentation; then the
generator (or sum of two generators) whose Q-value has the largest
p-power denominator relative to its order is split off, together with its
orthogonal complement, until nothing is left.
"""

from __future__ import annotations

from typing import NamedTuple

from .module import (
    Component,
    DegenerateModuleError,
    Fqm,
    normalize_D,
    primary_decomposition,
)
from .numtheory import prime_power, valuation
from .zmatrix import subgroup_presentation


class PairChoice(NamedTuple):
    i: int
    j: int
    beta: int
    defect: int


def _exponent(order: int, p: int) -> int:
    q, r = prime_power(order)
    if q != p:
        raise ValueError(f"generator order {order} is not a power of {p}")
    return r


def _beta(value, p: int) -> int:
    return valuation(value.den, p) if value.den > 1 else 0


def standard_presentation(m: Fqm, p: int) -> Fqm:
    """Isomorphic presentation of a p-primary module with descending orders."""
    for d in m.orders:
        _exponent(d, p)
    if all(a >= b for a, b in zip(m.orders, m.orders[1:])):
        return m
    orders, gens = subgroup_presentation(m.orders, m.basis())
    return m.restrict(gens[::-1], orders[::-1])


def _unit(m: Fqm, *idx: int) -> tuple[int, ...]:
    x = [0] * m.rank
    for i in idx:
        x[i] += 1
    return tuple(x)


def best_pair(m: Fqm, p: int | None = None) -> PairChoice:
    """Pair (i, j), i <= j, minimizing max(r_i, r_j) - beta (+1 when p = 2).

    beta is the p-adic exponent of the denominator of Q(e_i) for i = j and
    of Q(e_i + e_j) otherwise.  Indices are 0-based; ties go to the
    lexicographically smallest pair.
    """
    if m.rank == 0:
        raise ValueError("the zero module has no generators")
    if p is None:
        p = prime_power(m.orders[0])[0]
    exps = [_exponent(d, p) for d in m.orders]
    shift = 1 if p == 2 else 0
    best = None
    for i in range(m.rank):
        for j in range(i, m.rank):
            x = _unit(m, i) if i == j else _unit(m, i, j)
            beta = _beta(m.Q(x), p)
            defect = max(exps[i], exps[j]) + shift - beta
            if best is None or defect < best.defect:
                best = PairChoice(i, j, beta, defect)
    if best.defect > shift:
        raise DegenerateModuleError("no splitting pair: the module is degenerate")
    return best


def _split_cyclic(m: Fqm, p: int, choice: PairChoice):
    x = _unit(m, choice.j) if choice.i == choice.j else _unit(m, choice.i, choice.j)
    value = m.Q(x)
    r = choice.beta - (1 if p == 2 else 0)
    # value = a / p^beta with a a unit, because the defect is zero
    a = value.num
    rest, _ = m.orthogonal_complement([x])
    return Component.A(p, r, a), rest


def decompose_odd(m: Fqm, p: int) -> list[Component]:
    """Split a p-primary module (p odd) into cyclic A-components."""
    if p == 2:
        raise ValueError("decompose_odd needs an odd prime")
    out = []
    while m.rank:
        m = standard_presentation(m, p)
        comp, m = _split_cyclic(m, p, best_pair(m, p))
        out.append(comp)
    return out


def decompose_two(m: Fqm) -> list[Component]:
    """Split a 2-primary module into A-, B- and C-components."""
    out = []
    while m.rank:
        m = standard_presentation(m, 2)
        choice = best_pair(m, 2)
        if choice.defect == 0:
            comp, m = _split_cyclic(m, 2, choice)
            out.append(comp)
            continue
        # every Q(e_i) has denominator at most the order of e_i; pair the
        # largest generator with a partner it pairs nondegenerately with
        r1 = _exponent(m.orders[0], 2)
        e0 = _unit(m, 0)
        half = tuple(2 ** (r1 - 1) * c for c in e0)
        j1 = next((j for j in range(1, m.rank) if m.B(half, _unit(m, j))), None)
        if j1 is None:
            raise DegenerateModuleError("largest generator lies in a degenerate part")
        ej = _unit(m, j1)
        scale = 2**r1
        a = (scale * m.Q(e0).lift()).numerator
        c = (scale * m.Q(ej).lift()).numerator
        b = (scale * m.B(e0, ej).lift()).numerator
        out.append(normalize_D(r1, a, b, c))
        m, _ = m.orthogonal_complement([e0, ej])
    return out


def jordan_decomposition(m: Fqm) -> list[Component]:
    """Indecomposable components of m, grouped by increasing prime."""
    if not m.is_nondegenerate():
        raise DegenerateModuleError("cannot decompose a degenerate module")
    out = []
    for p, part in primary_decomposition(m):
        out += decompose_two(part) if p == 2 else decompose_odd(part, p)
    return out


def reconstruct(components) -> Fqm:
    """Orthogonal sum of the modules of the given components."""
    from .module import direct_sum

    return direct_sum(*(c.module() for c in components))
