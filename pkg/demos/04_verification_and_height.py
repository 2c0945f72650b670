"""Checking P_N far past the solve precision, and measuring coefficient growth."""

# %% Plug the q-expansions back into P_N with extra precision.
from x0plane import log_height, minimality_check, plane_model, verify
from x0plane.minpoly import height_bound, residual

P = plane_model(7)
r = residual(7, P, 100)
print(f"P_7(j, f) = O(q^{r.validity + 1}), zero: {r.is_zero()}")

# %% A perturbed polynomial fails at once, and the residual shows where.
from x0plane import BivariatePoly

terms = dict(P.terms)
terms[0, 0] += 1
bad = BivariatePoly(7, terms)
r = residual(7, bad, 0)
print("perturbed: first nonzero residual at q^%d" % r.valuation, "verify ->", verify(7, bad))

# %% Minimality: no relation of smaller bidegree exists.
print("minimal for N=2..7:", all(minimality_check(N) for N in range(2, 8)))

# %% Height against 6 l ln l + 18 l for small primes.
for l in (2, 3, 5, 7):
    print(f"l={l}: log height {log_height(plane_model(l)):.1f}, bound {height_bound(l):.1f}")
