"""Finite quadratic modules presented on independent cyclic generators."""

from __future__ import annotations

import cmath
import math
from collections import Counter
from dataclasses import dataclass
from math import gcd, lcm, prod

import numpy as np

from .numtheory import factorize, kronecker, smallest_nonresidue, valuation
from .qz import QZ, Mu8
from .zmatrix import kernel_mod, subgroup_presentation

ENUMERATION_BUDGET = 10**5


class DegenerateModuleError(ValueError):
    """The bilinear form of a presented module has a nontrivial radical."""


class BudgetExceeded(RuntimeError):
    """An enumeration would touch more elements than allowed."""


class Fqm:
    """A finite quadratic module on generators e_i of orders ``orders[i]``.

    ``q[i] = Q(e_i)`` and ``b[i][j] = B(e_i, e_j)`` with ``b[i][i] = 2 q[i]``.
    The presentation must make Q well defined; nondegeneracy is checked
    unless ``check_nondegenerate=False`` (used to study degenerate data).
    """

    __slots__ = ("orders", "q", "b", "_num")

    def __init__(self, orders, q, b=None, *, check_nondegenerate: bool = True):
        orders = tuple(int(d) for d in orders)
        q = tuple(x if isinstance(x, QZ) else QZ.parse(x) for x in q)
        k = len(orders)
        if len(q) != k:
            raise ValueError("orders and q have different lengths")
        if any(d < 2 for d in orders):
            raise ValueError("generator orders must be >= 2")
        if b is None:
            b = [[2 * q[i] if i == j else QZ() for j in range(k)] for i in range(k)]
        b = tuple(tuple(x if isinstance(x, QZ) else QZ.parse(x) for x in row) for row in b)
        if len(b) != k or any(len(row) != k for row in b):
            raise ValueError("b must be a square matrix matching orders")
        for i in range(k):
            if b[i][i] != 2 * q[i]:
                raise ValueError(f"b[{i}][{i}] must equal 2*q[{i}]")
            if orders[i] ** 2 * q[i] or orders[i] * b[i][i]:
                raise ValueError(f"Q is not well defined on generator {i}")
            for j in range(k):
                if b[i][j] != b[j][i]:
                    raise ValueError("b must be symmetric")
                if gcd(orders[i], orders[j]) % b[i][j].order:
                    raise ValueError(f"B(e_{i}, e_{j}) incompatible with the orders")
        object.__setattr__(self, "orders", orders)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "_num", None)
        if check_nondegenerate and self.radical():
            raise DegenerateModuleError("bilinear form is degenerate")

    def __setattr__(self, name, value):
        raise AttributeError("Fqm is immutable")

    # -- basic data -------------------------------------------------------

    @property
    def rank(self) -> int:
        return len(self.orders)

    @property
    def size(self) -> int:
        return prod(self.orders)

    @property
    def denominator(self) -> int:
        """Common denominator N of all Q- and B-values on generators."""
        return self._numerators()[0]

    def _numerators(self):
        if self._num is None:
            n = lcm(1, *(x.den for x in self.q), *(x.den for row in self.b for x in row))
            qn = [x.num * (n // x.den) for x in self.q]
            bn = [[x.num * (n // x.den) for x in row] for row in self.b]
            object.__setattr__(self, "_num", (n, qn, bn))
        return self._num

    def reduce(self, x) -> tuple[int, ...]:
        if len(x) != self.rank:
            raise ValueError(f"element has {len(x)} coordinates, module has {self.rank}")
        return tuple(int(c) % d for c, d in zip(x, self.orders))

    def zero(self) -> tuple[int, ...]:
        return (0,) * self.rank

    def basis(self) -> list[tuple[int, ...]]:
        return [tuple(int(i == j) for j in range(self.rank)) for i in range(self.rank)]

    def element_order(self, x) -> int:
        x = self.reduce(x)
        return lcm(1, *(d // gcd(c, d) for c, d in zip(x, self.orders)))

    # -- evaluation -------------------------------------------------------

    def Q(self, x) -> QZ:
        x = self.reduce(x)
        n, qn, bn = self._numerators()
        k = self.rank
        total = sum(qn[i] * x[i] * x[i] for i in range(k))
        total += sum(bn[i][j] * x[i] * x[j] for i in range(k) for j in range(i + 1, k))
        return QZ(total, n)

    def B(self, x, y) -> QZ:
        x, y = self.reduce(x), self.reduce(y)
        n, _, bn = self._numerators()
        k = self.rank
        return QZ(sum(bn[i][j] * x[i] * y[j] for i in range(k) for j in range(k)), n)

    def elements(self, budget: int = ENUMERATION_BUDGET) -> np.ndarray:
        """All elements as a (size, rank) integer array in lexicographic order."""
        if self.size > budget:
            raise BudgetExceeded(f"module has {self.size} elements, budget is {budget}")
        if self.rank == 0:
            return np.zeros((1, 0), dtype=np.int64)
        grid = np.indices(self.orders, dtype=np.int64)
        return grid.reshape(self.rank, -1).T.copy()

    def q_numerators(self, elems: np.ndarray) -> np.ndarray:
        """Q(x) * N mod N for every row x of ``elems``."""
        n, qn, bn = self._numerators()
        if n >= 2**31:
            raise OverflowError("denominator too large for vectorized evaluation")
        out = np.zeros(len(elems), dtype=np.int64)
        for i in range(self.rank):
            xi = elems[:, i]
            out = (out + (xi * xi % n) * qn[i]) % n
            for j in range(i + 1, self.rank):
                if bn[i][j]:
                    out = (out + (xi * elems[:, j] % n) * bn[i][j]) % n
        return out

    def histogram(self, budget: int = ENUMERATION_BUDGET) -> dict[QZ, int]:
        """Number of elements taking each Q-value."""
        n = self.denominator
        counts = Counter(self.q_numerators(self.elements(budget)).tolist())
        return {QZ(k, n): v for k, v in sorted(counts.items())}

    def sigma_numeric(self, budget: int = ENUMERATION_BUDGET) -> complex:
        """(1/sqrt|M|) * sum_x exp(-2 pi i Q(x)) by full enumeration."""
        n = self.denominator
        counts = np.bincount(self.q_numerators(self.elements(budget)), minlength=n)
        total = sum(int(c) * cmath.exp(-2j * cmath.pi * k / n)
                    for k, c in enumerate(counts) if c)
        return total / math.sqrt(self.size)

    def sigma_exact(self) -> Mu8:
        from .jordan import jordan_decomposition

        out = Mu8(0)
        for comp in jordan_decomposition(self):
            out = out * comp.sigma()
        return out

    # -- submodules -------------------------------------------------------

    def radical(self) -> list[tuple[int, ...]]:
        """Generators of {x : B(x, e_j) = 0 for all j}."""
        return self.orthogonal_generators(self.basis())

    def is_nondegenerate(self) -> bool:
        return not self.radical()

    def orthogonal_generators(self, gens) -> list[tuple[int, ...]]:
        """Generators (possibly redundant) of gens^perp."""
        n, _, bn = self._numerators()
        k = self.rank
        rows = []
        for s in gens:
            s = self.reduce(s)
            rows.append([sum(bn[i][j] * s[j] for j in range(k)) % n for i in range(k)])
        rows = [r for r in rows if any(r)]
        return kernel_mod(rows, [n] * len(rows), self.orders)

    def submodule(self, gens, *, check_nondegenerate: bool = False):
        """Present the subgroup spanned by ``gens``.

        Returns ``(sub, embed)``: ``sub`` is an Fqm on independent cyclic
        generators whose images in ``self`` are ``embed``.
        """
        gens = [self.reduce(g) for g in gens]
        orders, embed = subgroup_presentation(self.orders, gens)
        return self.restrict(embed, orders, check_nondegenerate=check_nondegenerate), embed

    def restrict(self, embed, orders, *, check_nondegenerate: bool = False) -> Fqm:
        """The module on given elements, assumed independent with given orders."""
        k = len(embed)
        q = [self.Q(g) for g in embed]
        b = [[self.B(embed[i], embed[j]) for j in range(k)] for i in range(k)]
        return Fqm(orders, q, b, check_nondegenerate=check_nondegenerate)

    def orthogonal_complement(self, gens):
        """``(sub, embed)`` presenting gens^perp; see :meth:`submodule`."""
        return self.submodule(self.orthogonal_generators(gens))

    # -- misc -------------------------------------------------------------

    def elementary_divisors(self) -> list[int]:
        """Prime-power invariants of the underlying group, sorted."""
        out = []
        for d in self.orders:
            out += [p**e for p, e in factorize(d).items()]
        return sorted(out)

    def to_json(self) -> dict:
        return {
            "orders": list(self.orders),
            "q": [str(x) for x in self.q],
            "b": [[str(x) for x in row] for row in self.b],
        }

    @classmethod
    def from_json(cls, data: dict, **kwargs) -> Fqm:
        try:
            return cls(data["orders"], data["q"], data["b"], **kwargs)
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed module JSON: {exc}") from None

    def __eq__(self, other) -> bool:
        if not isinstance(other, Fqm):
            return NotImplemented
        return (self.orders, self.q, self.b) == (other.orders, other.q, other.b)

    def __hash__(self) -> int:
        return hash((self.orders, self.q, self.b))

    def __repr__(self) -> str:
        q = ", ".join(map(str, self.q))
        return f"Fqm(orders={list(self.orders)}, q=[{q}])"


ZERO = Fqm((), ())


def direct_sum(*modules: Fqm) -> Fqm:
    """Orthogonal direct sum; generators are concatenated."""
    orders, q = [], []
    for m in modules:
        orders += m.orders
        q += m.q
    k = len(orders)
    b = [[QZ()] * k for _ in range(k)]
    off = 0
    for m in modules:
        for i in range(m.rank):
            b[off + i][off:off + m.rank] = m.b[i]
        off += m.rank
    return Fqm(orders, q, b, check_nondegenerate=False)


def subgroup_elements(orders, gens) -> set[tuple[int, ...]]:
    """All elements of the subgroup spanned by ``gens`` (closure by BFS)."""
    zero = (0,) * len(orders)
    seen = {zero}
    frontier = [zero]
    gens = [tuple(int(c) % d for c, d in zip(g, orders)) for g in gens]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = tuple((a + c) % d for a, c, d in zip(x, g, orders))
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


# -- constructors -----------------------------------------------------------

def make_A(p: int, r: int, a: int) -> Fqm:
    """Cyclic module Z/p^r with Q(x) = a x^2 / p^r (p odd) or a x^2 / 2^(r+1)."""
    if r < 1 or a % p == 0:
        raise ValueError("need r >= 1 and a coprime to p")
    den = p**r if p != 2 else 2 ** (r + 1)
    return Fqm([p**r], [QZ(a, den)])


def make_B(r: int) -> Fqm:
    """(Z/2^r)^2 with Q(x, y) = (x^2 + xy + y^2) / 2^r."""
    return make_D(r, 1, 1, 1)


def make_C(r: int) -> Fqm:
    """(Z/2^r)^2 with Q(x, y) = xy / 2^r."""
    return make_D(r, 0, 1, 0)


def make_D(r: int, a: int, b: int, c: int, *, check: bool = True) -> Fqm:
    """(Z/2^r)^2 with Q(x, y) = (a x^2 + b xy + c y^2) / 2^r.

    ``b`` must be odd; ``check=False`` skips both that test and the
    nondegeneracy check so degenerate instances can be built on purpose.
    """
    if r < 1:
        raise ValueError("r must be positive")
    if check and b % 2 == 0:
        raise ValueError("b must be odd for a nondegenerate D module")
    n = 2**r
    qa, qc, bb = QZ(a, n), QZ(c, n), QZ(b, n)
    return Fqm([n, n], [qa, qc], [[2 * qa, bb], [bb, 2 * qc]], check_nondegenerate=check)


def make_Am(m: int) -> Fqm:
    """Z/m with Q(x) = x^2/m for odd m, x^2/(2m) for even m."""
    if m < 1:
        raise ValueError("m must be positive")
    if m == 1:
        return ZERO
    return Fqm([m], [QZ(1, m if m % 2 else 2 * m)])


# -- classification helpers -------------------------------------------------

def a_class(p: int, r: int, a: int) -> int:
    """Canonical representative of the isometry class of A(p, r, a)."""
    if a % p == 0:
        raise ValueError(f"{a} is not coprime to {p}")
    if p != 2:
        return 1 if kronecker(a, p) == 1 else smallest_nonresidue(p)
    return a % 4 if r == 1 else a % 8


def normalize_D(r: int, a: int, b: int, c: int) -> Component:
    """Isometry type of make_D(r, a, b, c): B(r) if a and c are odd, else C(r)."""
    if b % 2 == 0:
        raise ValueError("b must be odd")
    return Component.B(r) if a % 2 and c % 2 else Component.C(r)


@dataclass(frozen=True)
class Component:
    """An indecomposable Jordan constituent A(p, r, a), B(r) or C(r)."""

    tag: str
    r: int
    p: int = 2
    a: int | None = None

    def __post_init__(self):
        if self.tag not in ("A", "B", "C"):
            raise ValueError(f"unknown component tag {self.tag!r}")
        if self.r < 1:
            raise ValueError("r must be positive")
        if self.tag == "A":
            if self.a is None or self.a != a_class(self.p, self.r, self.a):
                raise ValueError("A-components need a canonical a; use Component.A")
        elif self.p != 2 or self.a is not None:
            raise ValueError("B/C components live at p = 2 and carry no a")

    @classmethod
    def A(cls, p: int, r: int, a: int) -> Component:
        return cls("A", r, p, a_class(p, r, a))

    @classmethod
    def B(cls, r: int) -> Component:
        return cls("B", r)

    @classmethod
    def C(cls, r: int) -> Component:
        return cls("C", r)

    @property
    def order(self) -> int:
        return self.p**self.r if self.tag == "A" else 4**self.r

    def module(self) -> Fqm:
        if self.tag == "A":
            return make_A(self.p, self.r, self.a)
        return make_B(self.r) if self.tag == "B" else make_C(self.r)

    def sigma(self) -> Mu8:
        """Closed-form sigma invariant."""
        p, r = self.p, self.r
        if self.tag == "B":
            return Mu8(4 * r)
        if self.tag == "C":
            return Mu8(0)
        if p == 2:
            sign = kronecker(self.a, 2) ** r
            return Mu8(-self.a + (4 if sign < 0 else 0))
        sign = kronecker(2 * self.a, p) ** r
        return Mu8(p**r - 1 + (4 if sign < 0 else 0))

    def to_json(self) -> dict:
        if self.tag == "A":
            return {"tag": "A", "p": self.p, "r": self.r, "a": self.a}
        return {"tag": self.tag, "r": self.r}

    @classmethod
    def from_json(cls, data: dict) -> Component:
        try:
            tag = data["tag"]
            if tag == "A":
                return cls.A(int(data["p"]), int(data["r"]), int(data["a"]))
            if tag in ("B", "C"):
                return cls(tag, int(data["r"]))
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed component JSON: {exc}") from None
        raise ValueError(f"unknown component tag {tag!r}")

    def __str__(self) -> str:
        if self.tag == "A":
            return f"A({self.p}^{self.r}, a={self.a})"
        return f"{self.tag}(2^{self.r})"


# -- decompositions ---------------------------------------------------------

def primary_decomposition(m: Fqm) -> list[tuple[int, Fqm]]:
    """(p, M(p)) for each prime p dividing |M|, in increasing p.

    M(p) is generated by (d_i / p^v_p(d_i)) e_i; these are already
    independent, so no re-presentation is needed.
    """
    primes = sorted({p for d in m.orders for p in factorize(d)})
    out = []
    for p in primes:
        embed, orders = [], []
        for i, d in enumerate(m.orders):
            if d % p:
                continue
            pv = p ** valuation(d, p)
            g = [0] * m.rank
            g[i] = d // pv
            embed.append(tuple(g))
            orders.append(pv)
        out.append((p, m.restrict(embed, orders)))
    return out


def sigma_exact(m: Fqm) -> Mu8:
    return m.sigma_exact()


def scramble(m: Fqm, rng, steps: int = 8) -> Fqm:
    """Same module on a randomly changed basis with the same orders.

    Applies e_i <- u e_i (u a unit mod d_i) and e_i <- e_i + t e_j with
    t a multiple of d_j / gcd(d_i, d_j), so every step is an automorphism
    of the underlying group.
    """
    k = m.rank
    if k == 0:
        return m
    gens = [list(g) for g in m.basis()]
    d = m.orders
    for _ in range(steps):
        i = rng.randrange(k)
        if k == 1 or rng.random() < 0.3:
            u = rng.randrange(1, d[i])
            if gcd(u, d[i]) == 1:
                gens[i] = [u * c for c in gens[i]]
            continue
        j = rng.choice([x for x in range(k) if x != i])
        t = rng.randrange(d[j]) * (d[j] // gcd(d[i], d[j]))
        gens[i] = [a + t * b for a, b in zip(gens[i], gens[j])]
    return m.restrict([m.reduce(g) for g in gens], d, check_nondegenerate=True)
