"""Kronecker symbols, modular square roots, CRT and constrained prime search."""

from __future__ import annotations

from math import gcd, prod

SEARCH_BOUND = 10**6
# Miller-Rabin with these bases is exact below 341_550_071_728_321.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17)
PRIME_LIMIT = 330_000_000_000_000


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a|n)."""
    if n == 0:
        if a == 0:
            raise ValueError("kronecker(0, 0) is undefined")
        return 1 if abs(a) == 1 else 0
    if a % 2 == 0 and n % 2 == 0:
        return 0
    result = 1
    v = 0
    while n % 2 == 0:
        n //= 2
        v += 1
    if v % 2 == 1 and a % 8 in (3, 5):
        result = -1
    if n < 0:
        n = -n
        if a < 0:
            result = -result
    # Jacobi symbol for odd positive n
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def is_prime(n: int) -> bool:
    """Deterministic primality test for ``n < PRIME_LIMIT``."""
    if n < 2:
        return False
    if n >= PRIME_LIMIT:
        raise ValueError(f"{n} exceeds the deterministic primality range")
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factorize(n: int) -> dict[int, int]:
    """Trial-division factorization of a positive integer (desk-scale only)."""
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_power(m: int) -> tuple[int, int]:
    """Return (p, k) with m = p**k, or raise ValueError."""
    if m < 2:
        raise ValueError(f"{m} is not a prime power")
    f = factorize(m)
    if len(f) != 1:
        raise ValueError(f"{m} is not a prime power")
    (p, k), = f.items()
    return p, k


def valuation(n: int, p: int) -> int:
    if n == 0:
        raise ValueError("valuation of zero")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def _tonelli(a: int, p: int) -> int:
    """A square root of the unit a modulo the odd prime p."""
    a %= p
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c, t, r = i, b * b % p, t * b * b % p, r * b % p
    return r


def _unit_roots(u: int, p: int, k: int) -> list[int]:
    """All square roots mod p**k of a unit u (sorted); empty if none."""
    m = p**k
    u %= m
    if p != 2:
        if kronecker(u, p) != 1:
            return []
        v = _tonelli(u, p)
        pk = p
        for _ in range(1, k):
            # Hensel step: v <- v - (v^2 - u) / (2v)
            pk *= p
            v = (v - (v * v - u) * pow(2 * v, -1, pk)) % pk
        return sorted({v, (m - v) % m})
    if k == 1:
        return [1]
    if k == 2:
        return [1, 3] if u % 4 == 1 else []
    if u % 8 != 1:
        return []
    v = 1
    for j in range(3, k):
        # v is a root mod 2^j; fix it up to a root mod 2^(j+1)
        if (v * v - u) % (1 << (j + 1)):
            v += 1 << (j - 1)
    half = m >> 1
    return sorted({v % m, (-v) % m, (v + half) % m, (half - v) % m})


def sqrt_mod(a: int, m: int, search_bound: int = SEARCH_BOUND) -> int | None:
    """Smallest v >= 0 with v*v = a (mod m) for a prime power m, or None."""
    p, k = prime_power(m)
    a %= m
    if m <= search_bound:
        for v in range(m):
            if (v * v - a) % m == 0:
                return v
        return None
    if a == 0:
        return 0
    e = valuation(a, p)
    if e % 2:
        return None
    roots = _unit_roots(a // p**e, p, k - e)
    if not roots:
        return None
    return p ** (e // 2) * roots[0]


def crt(pairs) -> int:
    """Solve x = r_i (mod m_i) for pairwise coprime moduli; result in [0, prod)."""
    x, modulus = 0, 1
    for r, m in pairs:
        if m < 1:
            raise ValueError("moduli must be positive")
        if gcd(modulus, m) != 1:
            raise ValueError(f"moduli {modulus} and {m} are not coprime")
        # x + modulus*t = r (mod m)
        t = ((r - x) * pow(modulus, -1, m)) % m if m > 1 else 0
        x += modulus * t
        modulus *= m
    return x % modulus


def bezout_cofactors(moduli) -> list[int]:
    """Integers M_i with sum (N/n_i) * M_i = 1, N the product of the pairwise
    coprime n_i; each M_i is reduced into [0, n_i)."""
    moduli = list(moduli)
    total = prod(moduli)
    out = []
    for n in moduli:
        cof = total // n
        out.append(pow(cof, -1, n) if n > 1 else 0)
    return out


def solve_quad_congruence(c: int, rhs: int, m: int,
                          search_bound: int = SEARCH_BOUND) -> int | None:
    """Smallest v >= 0 with c*v*v = rhs (mod m), or None."""
    if m < 1:
        raise ValueError("modulus must be positive")
    if m <= search_bound or gcd(c, m) != 1 or gcd(rhs, m) != 1:
        for v in range(m):
            if (c * v * v - rhs) % m == 0:
                return v
        return None
    target = rhs * pow(c, -1, m) % m
    per_prime = []
    for p, k in factorize(m).items():
        roots = _unit_roots(target, p, k)
        if not roots:
            return None
        per_prime.append([(r, p**k) for r in roots])
    best = None
    stack = [(0, [])]
    while stack:
        i, chosen = stack.pop()
        if i == len(per_prime):
            v = crt(chosen)
            best = v if best is None else min(best, v)
            continue
        for pair in per_prime[i]:
            stack.append((i + 1, chosen + [pair]))
    return best


def find_prime(residue_conditions=(), legendre_conditions=(),
               limit: int = SEARCH_BOUND) -> int:
    """Smallest odd prime q with q = r (mod m) for every (r, m) and
    kronecker(q, p) = eps for every (p, eps).

    Raises ValueError when nothing qualifies below ``limit``.
    """
    residue_conditions = list(residue_conditions)
    legendre_conditions = list(legendre_conditions)
    if limit > PRIME_LIMIT:
        raise ValueError("search limit beyond deterministic primality range")
    for q in range(3, limit, 2):
        if any((q - r) % m for r, m in residue_conditions):
            continue
        if not is_prime(q):
            continue
        if all(kronecker(q, p) == eps for p, eps in legendre_conditions):
            return q
    raise ValueError(
        f"no prime below {limit} satisfies {residue_conditions} / {legendre_conditions}"
    )


def smallest_nonresidue(p: int) -> int:
    for z in range(2, p):
        if kronecker(z, p) == -1:
            return z
    raise ValueError(f"no quadratic non-residue modulo {p}")
