"""Truncated q-series and the forms behind the plane model.

Run with ``python3 demos/01_q_expansions.py``.  Each ``# %%`` block is a
cell; the file reads top to bottom like a notebook.
"""

# %% Series carry a validity bound: the last exponent whose coefficient is known.
from x0plane import QSeries, delta, f_function, j_invariant

a = QSeries([1, 1], 0, 5)  # 1 + q + O(q^6)
b = QSeries([1, -1, 1], 0, 8)  # 1 - q + q^2 + O(q^9)
print("a*b =", a * b)
print("valid through q^%d" % (a * b).validity)

# %% Inversion needs a unit leading coefficient and keeps the precision honest.
print("1/b =", b.invert())

# %% Ramanujan's Delta; the coefficients are tau(n).
D = delta(12).series
print("tau(1..12) =", D.coefficients(13, 1))

# %% The j-invariant has a simple pole at q = 0.
j = j_invariant(5).series
print("j =", j)

# %% f = Delta(N z) / Delta(z) vanishes to order N - 1 at infinity.
for N in (2, 3, 5):
    f = f_function(N, N + 4).series
    print(f"N={N}: valuation {f.valuation}, first coefficients {f.coefficients(N + 4, N - 1)}")
