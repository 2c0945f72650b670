"""Cusps of Gamma_0(N), pole divisors and the birationality certificate."""

# %% Cusp classes for a composite level.
from x0plane import birational_certificate, cusp_classes, curve_invariants, dedekind_psi, degree_f

N = 12
print(f"cusps of X_0({N})")
for c in cusp_classes(N):
    print(f"  d={c.d:<3} multiplicity={c.multiplicity} ord Delta={c.ord_delta} ord f={c.ord_f}")

# %% The poles of f sit at cusps with d^2 < N; their total is the x-degree of P_N.
print("deg div_inf(f) =", degree_f(N))

# %% f1 = E4^3/Delta has degree psi(N); f2 = f1^(N-1) Delta/Delta(N z) has degree (N-2)psi(N)+1.
# The two are coprime, so together they generate the function field.
for N in (2, 5, 12, 37, 100):
    print(birational_certificate(N))

# %% The degree of the plane curve agrees with the Riemann-Roch count.
for N in (11, 24, 97):
    inv = curve_invariants(N)
    print(f"N={N}: genus {inv.genus}, dim M_12 {inv.dim_M12}, psi {dedekind_psi(N)}")
