"""The plane model P_N of X_0(N): minimal polynomial of f = Delta(N z)/Delta over C(j).

P_N is found as the one-dimensional integer kernel of the matrix whose
column ``(a, b)`` holds the q-expansion coefficients of ``j^a f^b``.  The
bidegree bounds come from pole degrees: ``deg_y P = [C(X_0(N)) : C(j)] =
psi(N)`` and ``deg_x P = [C(X_0(N)) : C(f)] = degree_f(N)``.

The default solver works modulo many 30-bit primes, lifts by CRT and
rational reconstruction, and always re-checks the lifted candidate against
the exact integer matrix before returning it.
"""

from __future__ import annotations

import logging
import math
import warnings
from itertools import islice
from dataclasses import dataclass, field

import numpy as np

from . import forms
from .bivariate import BivariatePoly
from .cuspdiv import degree_f
from .linalg import (
    bareiss_kernel,
    crt_combine,
    kernel_mod_p,
    primes_below,
    rank_mod_p,
    rational_reconstruction,
    reduce_mod_primes,
)
from .ntarith import dedekind_psi
from .qseries import QSeries

__all__ = [
    "KernelProblem",
    "KernelEmpty",
    "KernelTooLarge",
    "NormalizationFailure",
    "DEFAULT_GUARD",
    "bidegree_bounds",
    "monomial_valuation",
    "build_kernel_problem",
    "solve_kernel",
    "plane_model",
    "verify",
    "residual",
    "minimality_check",
    "log_height",
    "height_bound",
]

log = logging.getLogger(__name__)

DEFAULT_GUARD = 32
MAX_RETRIES = 3
PRIME_BATCH = 8


class KernelEmpty(RuntimeError):
    """No relation within the bidegree bounds: the bounds or the series are wrong."""


class KernelTooLarge(RuntimeError):
    """The kernel has dimension > 1: too few rows to pin the relation down."""


class NormalizationFailure(UserWarning):
    """The relation has zero constant term; it was normalized by its leading y-coefficient."""


def bidegree_bounds(N: int) -> tuple[int, int]:
    """``(deg_x, deg_y)`` of P_N: ``(degree_f(N), psi(N))``."""
    return degree_f(N), dedekind_psi(N)


def monomial_valuation(N: int, a: int, b: int) -> int:
    """q-valuation of ``j^a f^b``."""
    return b * (N - 1) - a


def _default_e_max(dx, dy, guard):
    return -dx + (dx + 1) * (dy + 1) + guard


@dataclass
class KernelProblem:
    """Exact coefficient matrix of the monomials ``j^a f^b``, ``a <= D_x``, ``b <= D_y``.

    ``columns[k]`` lists the coefficients of q^e for ``e_min <= e <= e_max``
    of the monomial ``monomials[k]``; ``column_validity[k]`` is the validity
    of the series it was read from (always ``>= e_max``).
    """

    N: int
    bounds: tuple[int, int]
    guard: int
    e_min: int
    e_max: int
    monomials: list
    columns: list = field(repr=False)
    column_validity: list = field(repr=False)

    @property
    def shape(self):
        return (self.e_max - self.e_min + 1, len(self.monomials))

    def entry(self, e, a, b):
        return self.columns[self.monomials.index((a, b))][e - self.e_min]

    def matrix(self):
        """The matrix as a numpy object array of Python ints (rows are q-exponents)."""
        M = np.empty(self.shape, dtype=object)
        for k, col in enumerate(self.columns):
            M[:, k] = col
        return M


def build_kernel_problem(N: int, guard: int = DEFAULT_GUARD, bounds=None, e_max=None) -> KernelProblem:
    """Fill the monomial matrix for level ``N``.

    ``bounds`` overrides the bidegree (used for minimality checks) and
    ``e_max`` the top row; by default the matrix has ``guard + 1`` more rows
    than columns.
    """
    if N < 2:
        raise ValueError("N must be at least 2")
    dx, dy = bounds if bounds is not None else bidegree_bounds(N)
    e_min = -dx
    if e_max is None:
        e_max = _default_e_max(dx, dy, guard)
    # j^a loses one unit of validity per factor; f^1 times j^{D_x} needs f valid to e_max + D_x.
    j = forms.j_invariant(e_max + max(dx - 1, 0)).series
    f = forms.f_function(N, max(e_max + dx, N - 1)).series

    jpow = [QSeries.one()]
    for _ in range(dx):
        jpow.append(jpow[-1] * j)
    fpow = [QSeries.one()]
    for _ in range(dy):
        fpow.append(fpow[-1] * f)

    monomials, columns, validity = [], [], []
    for b in range(dy + 1):
        fb = fpow[b].truncate(e_max + dx)
        for a in range(dx + 1):
            ja = jpow[a].truncate(e_max - fb.valuation)
            s = ja * fb.truncate(e_max - ja.valuation)
            assert s.validity >= e_max, (a, b, s.validity, e_max)
            monomials.append((a, b))
            columns.append(s.coefficients(e_max + 1, e_min))
            validity.append(s.validity)
    return KernelProblem(N, (dx, dy), guard, e_min, e_max, monomials, columns, validity)


# -- lifting ----------------------------------------------------------------


def _reconstruct_vector(residues, modulus):
    """Rational vector with common denominator from residues mod ``modulus``, or None."""
    bound = math.isqrt(modulus // 2)
    half = modulus // 2
    den = 1
    nums = []
    for x in residues:
        y = x * den % modulus
        if y > half:
            y -= modulus
        if abs(y) <= bound:
            nums.append(y)
            continue
        rr = rational_reconstruction(y, modulus, bound)
        if rr is None:
            return None
        n, d = rr
        den *= d
        if den > bound:
            return None
        nums = [v * d for v in nums]
        nums.append(n)
    return nums


def _exact_residual_rows(M, vector):
    """Indices of rows of ``M`` where ``M @ vector`` is nonzero."""
    v = np.array([int(c) for c in vector], dtype=object)
    r = M.dot(v)
    return [i for i, x in enumerate(r) if x != 0]


def _solve_bareiss(problem, M):
    basis = bareiss_kernel(M.tolist())
    if not basis:
        raise KernelEmpty(f"N={problem.N}: no relation at bounds {problem.bounds}")
    if len(basis) > 1:
        raise KernelTooLarge(f"N={problem.N}: kernel dimension {len(basis)}")
    return basis[0]


def _solve_modular(problem, M, primes):
    pivot = None
    residues, modulus = None, 1
    previous = {}
    too_large = 0
    good = 0
    while True:
        batch = list(islice(primes, PRIME_BATCH))
        if not batch:
            raise RuntimeError(f"N={problem.N}: primes exhausted before the kernel vector stabilized")
        for q, Mq in zip(batch, reduce_mod_primes(M, batch)):
            K = kernel_mod_p(Mq, q)
            dim = K.shape[0]
            if dim == 0:
                # The rank can only drop modulo p, so this certifies a zero kernel over Q.
                raise KernelEmpty(f"N={problem.N}: full column rank modulo {q}")
            if dim > 1:
                too_large += 1
                if good == 0 and too_large >= 3:
                    raise KernelTooLarge(f"N={problem.N}: kernel dimension {dim} modulo {too_large} primes")
                log.debug("prime %d: kernel dimension %d, skipped", q, dim)
                continue
            w = K[0]
            if pivot is None:
                # Prefer the constant monomial, which sits in column 0.
                pivot = int(np.flatnonzero(w)[0])
            if w[pivot] == 0:
                log.debug("prime %d divides the pivot coordinate, skipped", q)
                continue
            w = [int(x) for x in (w * pow(int(w[pivot]), -1, q)) % q]
            if residues is None:
                residues, modulus = w, q
            else:
                residues = [crt_combine(r, modulus, x, q)[0] for r, x in zip(residues, w)]
                modulus *= q
            good += 1
            # Two lifts: symmetric residues (enough when the normalized vector is
            # integral, as for every level tried so far) and rational
            # reconstruction, which needs about twice as many primes.
            half = modulus // 2
            lifts = {
                "integer": [r - modulus if r > half else r for r in residues],
                "rational": _reconstruct_vector(residues, modulus),
            }
            for kind, candidate in lifts.items():
                if candidate is None or candidate != previous.get(kind):
                    continue
                bad = _exact_residual_rows(M, candidate)
                if not bad:
                    log.info("N=%d: %s lift with %d primes (%d bits)", problem.N, kind, good, modulus.bit_length())
                    return candidate
                log.debug("%s candidate failed exact check on %d rows", kind, len(bad))
            previous = lifts


def solve_kernel(problem: KernelProblem, strategy: str = "modular", primes=None) -> BivariatePoly:
    """The normalized generator of the one-dimensional integer kernel of ``problem``.

    ``strategy`` is ``"modular"`` (multi-modular with exact re-check) or
    ``"bareiss"`` (fraction-free elimination over Z).  ``primes`` is an
    optional iterable of primes below 2**30 for the modular route.
    """
    M = problem.matrix()
    if strategy == "bareiss":
        vector = _solve_bareiss(problem, M)
    elif strategy == "modular":
        vector = _solve_modular(problem, M, iter(primes) if primes is not None else primes_below())
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    if _exact_residual_rows(M, vector):
        raise AssertionError("kernel vector failed exact verification")
    P = BivariatePoly.from_vector(problem.N, problem.monomials, vector)
    if P.normalization != "constant":
        warnings.warn(f"N={problem.N}: constant term vanishes; normalized by leading y-coefficient", NormalizationFailure)
    if P.pure_x_terms():
        log.warning("N=%d: P_N has pure x terms %s", problem.N, P.pure_x_terms())
    return P


def plane_model(N: int, guard: int = DEFAULT_GUARD, strategy: str = "modular", primes=None) -> BivariatePoly:
    """Compute P_N, doubling the guard rows up to three times if the kernel is too large."""
    for attempt in range(MAX_RETRIES + 1):
        problem = build_kernel_problem(N, guard)
        try:
            return solve_kernel(problem, strategy, primes)
        except KernelTooLarge:
            if attempt == MAX_RETRIES:
                raise
            log.warning("N=%d: kernel too large with guard %d, retrying", N, guard)
            guard = max(2 * guard, 1)


# -- verification -------------------------------------------------------------


def residual(N: int, P: BivariatePoly, extra_prec: int = 64) -> QSeries:
    """``P(j, f)`` as a q-series, from fresh expansions valid beyond the solve's rows.

    The series is valid up to ``e_max + extra_prec`` where ``e_max`` is the top
    row of the default kernel problem for ``P``'s bidegree.
    """
    dx, dy = P.degree_x, P.degree_y
    top = _default_e_max(dx, dy, DEFAULT_GUARD) + extra_prec
    j = forms.j_invariant(top + max(dx - 1, 0)).series
    f = forms.f_function(N, max(top + dx, N - 1)).series
    jpow = [QSeries.one()]
    for _ in range(dx):
        jpow.append(jpow[-1] * j)
    # Coefficients of y^b as polynomials in j, then Horner in f.
    rows = []
    for b in range(dy + 1):
        acc = QSeries.zero()
        for a in range(dx + 1):
            c = P.coefficient(a, b)
            if c:
                acc = acc + jpow[a].scale(c)
        rows.append(acc)
    result = rows[dy]
    for b in range(dy - 1, -1, -1):
        result = result * f + rows[b]
    return result.truncate(top)


def verify(N: int, P: BivariatePoly, extra_prec: int = 64) -> bool:
    """True iff ``P(j, f)`` vanishes on every exponent of the checked window."""
    return residual(N, P, extra_prec).is_zero()


def minimality_check(N: int, guard: int = DEFAULT_GUARD, tries: int = 5) -> bool:
    """True iff no nonzero relation exists at bidegrees ``(D_x - 1, D_y)`` and ``(D_x, D_y - 1)``.

    Full column rank modulo a single prime certifies a zero kernel over Z.
    """
    dx, dy = bidegree_bounds(N)
    for bounds in ((dx - 1, dy), (dx, dy - 1)):
        problem = build_kernel_problem(N, guard, bounds=bounds)
        M = problem.matrix()
        ncols = len(problem.monomials)
        primes = primes_below()
        if not any(rank_mod_p(M, next(primes)) == ncols for _ in range(tries)):
            return False
    return True


def log_height(P: BivariatePoly) -> float:
    """Natural logarithm of the largest absolute coefficient."""
    c = P.max_abs_coefficient()
    # math.log handles arbitrarily large ints exactly enough for reporting.
    return math.log(c)


def height_bound(level: int) -> float:
    """``6 l ln(l) + 18 l``, the height bound for the classical modular polynomial of prime level."""
    return 6 * level * math.log(level) + 18 * level
