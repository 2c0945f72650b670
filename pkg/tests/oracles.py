"""Slow, independent reference computations used only by the tests.

Nothing here imports the package's series or number-theory code; every
routine uses plain lists and brute force.
"""

from math import gcd


def brute_divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def brute_sigma3(n):
    return sum(d**3 for d in brute_divisors(n))


def brute_phi(n):
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def psi_by_cusp_sum(n):
    """Sum over d | n of (n/d) phi(g) / g with g = gcd(d, n/d)."""
    total = 0
    for d in brute_divisors(n):
        g = gcd(d, n // d)
        assert (n // d) * brute_phi(g) % g == 0
        total += (n // d) * brute_phi(g) // g
    return total


# -- power series on plain lists, coefficients of q^0..q^(L-1) ------------


def list_mul(a, b, L):
    out = [0] * L
    for i, x in enumerate(a[:L]):
        if x:
            for j, y in enumerate(b[: L - i]):
                out[i + j] += x * y
    return out


def list_inverse(a, L):
    """Solve the triangular Cauchy system a * b = 1 term by term (a[0] = +-1)."""
    assert a[0] in (1, -1)
    b = [0] * L
    for n in range(L):
        s = (1 if n == 0 else 0) - sum(a[k] * b[n - k] for k in range(1, min(n, len(a) - 1) + 1))
        b[n] = s * a[0]
    return b


def delta_naive(L):
    """Coefficients of q^1..q^L of Delta by multiplying out (1 - q^n) 24 times each."""
    prod = [1] + [0] * (L - 1)
    for n in range(1, L):
        for _ in range(24):
            prod = [prod[k] - (prod[k - n] if k >= n else 0) for k in range(L)]
    return prod  # prod[k] is the coefficient of q^(k+1) in Delta


def e4_naive(L):
    return [1] + [240 * brute_sigma3(n) for n in range(1, L)]


def j_naive(L):
    """Coefficients of q^-1..q^(L-2) of j = E4^3 / Delta by long division."""
    e = e4_naive(L)
    e3 = list_mul(list_mul(e, e, L), e, L)
    u = delta_naive(L)  # Delta / q
    return list_mul(e3, list_inverse(u, L), L)


def f_naive(N, L):
    """Coefficients of q^(N-1).. (L terms) of Delta(N z)/Delta."""
    u = delta_naive(L)
    uN = [0] * L  # Delta(Nz) / q^N
    for k in range(L):
        if k % N == 0 and k // N < L:
            uN[k] = u[k // N]
    return list_mul(uN, list_inverse(u, L), L)


# -- cusps by coset enumeration -------------------------------------------


def cusp_orbits(N):
    """Cusps of Gamma_0(N) as orbits of <T, -I> on P^1(Z/NZ).

    Right cosets Gamma_0(N) g correspond to bottom rows (c : d) of g; the
    cusp g(oo) = a/c is then determined by the orbit of (c : d) under
    (c, d) -> (c, c + d).  Returns a list of (gcd(c, N), orbit size).
    """
    units = [u for u in range(1, N + 1) if gcd(u, N) == 1]

    def canon(c, d):
        return min(((u * c) % N, (u * d) % N) for u in units)

    points = {canon(c, d) for c in range(N) for d in range(N) if gcd(gcd(c, d), N) == 1}
    seen = set()
    out = []
    for pt in sorted(points):
        if pt in seen:
            continue
        orbit = set()
        c, d = pt
        cur = pt
        while cur not in orbit:
            orbit.add(cur)
            c, d = cur
            cur = canon(c, c + d)
        seen |= orbit
        out.append((gcd(pt[0], N), len(orbit)))
    return out


def genus_zero_levels(limit=25):
    return [2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 16, 18, 25]
