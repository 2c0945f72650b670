"""Recovering P_N from q-expansions by exact linear algebra."""

# %% The kernel matrix: coefficients of j^a f^b, one row per q-exponent.
import numpy as np

from x0plane import bidegree_bounds, build_kernel_problem, plane_model, solve_kernel

N = 3
problem = build_kernel_problem(N)
print("bidegree bounds", bidegree_bounds(N), "matrix shape", problem.shape)

# %% Entries are big integers, so the matrix lives in an object array.
M = problem.matrix()
print("largest entry has", max(len(str(abs(int(x)))) for x in M.flat), "digits")

# %% Fraction-free elimination and the multi-modular route give the same polynomial.
P_bareiss = solve_kernel(problem, strategy="bareiss")
P_modular = solve_kernel(problem, strategy="modular")
assert P_bareiss == P_modular
print("P_3 =", P_modular)

# %% Larger levels use the multi-modular solver through plane_model.
P5 = plane_model(5)
print("P_5 has", len(P5.terms), "terms; y-degree", P5.degree_y, "x-degree", P5.degree_x)
print("coefficient sizes (digits):", np.array(sorted(len(str(abs(c))) for c in P5.terms.values())))
