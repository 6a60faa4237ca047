"""Molien series, symmetric power characters and equivariant map dimensions.

Two independent routes to invariant dimensions are provided: the Molien
series (per-element three-term recurrence for ``1/det(I - tA)``) and the
character average over ``S^n(C^2)`` computed from eigenvalues.
"""

import numpy as np

from .group import FiniteMatrixGroup, GroupElement
from .linalg import DEFAULT_POLICY, NumericalConsistencyError, TolerancePolicy


def _round_checked(values, pol: TolerancePolicy, what: str) -> list[int]:
    values = np.asarray(values, dtype=complex)
    out = []
    for d, v in enumerate(values):
        n = round(v.real)
        if abs(v - n) > pol.eq_tol:
            raise NumericalConsistencyError(f"{what}[{d}] = {v} is not an integer")
        out.append(int(n))
    return out


def molien_coefficients(grp: FiniteMatrixGroup, N: int) -> np.ndarray:
    """Raw (unrounded) Molien coefficients for degrees ``0..N``.

    For ``A`` with trace ``t`` and determinant ``D`` the expansion of
    ``1/(1 - t x + D x^2)`` obeys ``a_d = t a_{d-1} - D a_{d-2}``.
    """
    if N < 0:
        raise ValueError("N must be non-negative")
    total = np.zeros(N + 1, dtype=complex)
    for g in grp:
        tr = np.trace(g.matrix)
        det = np.linalg.det(g.matrix)
        a = np.zeros(N + 1, dtype=complex)
        prev, cur = 0.0, 1.0
        for d in range(N + 1):
            a[d] = cur
            prev, cur = cur, tr * cur - det * prev
        total = total + a
    return total / grp.order


def molien_series(grp: FiniteMatrixGroup, N: int) -> list[int]:
    """Hilbert series coefficients of ``C[x1, x2]^G`` up to degree ``N``."""
    return _round_checked(molien_coefficients(grp, N), grp.pol, "molien")


def series_product(a, b, N: int) -> list[int]:
    out = [0] * (N + 1)
    for i, x in enumerate(a[: N + 1]):
        if x:
            for j, y in enumerate(b[: N + 1 - i]):
                out[i + j] += x * y
    return out


def geometric_series(step: int, N: int) -> list[int]:
    """Coefficients of ``1/(1 - t^step)`` truncated at degree ``N``."""
    return [1 if d % step == 0 else 0 for d in range(N + 1)]


def closed_form_icosahedral(N: int) -> list[int]:
    """Expansion of ``(1 + t^30) / ((1 - t^12)(1 - t^20))`` up to ``t^N``."""
    if N < 0:
        raise ValueError("N must be non-negative")
    num = [0] * (N + 1)
    num[0] = 1
    if N >= 30:
        num[30] = 1
    return series_product(
        series_product(num, geometric_series(12, N), N), geometric_series(20, N), N
    )


def eigenvalues_2x2(m) -> tuple[complex, complex]:
    m = np.asarray(m, dtype=complex)
    tr = m[0, 0] + m[1, 1]
    det = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
    root = np.sqrt(tr * tr - 4 * det + 0j)
    return (tr + root) / 2, (tr - root) / 2


def char_sym_power(g, n: int) -> complex:
    """Character of ``S^n(C^2)`` at ``g``: complete homogeneous sum of eigenvalues."""
    if n < 0:
        raise ValueError("n must be non-negative")
    m = g.matrix if isinstance(g, GroupElement) else g
    l1, l2 = eigenvalues_2x2(m)
    return complex(sum(l1 ** (n - j) * l2**j for j in range(n + 1)))


def character_table(grp: FiniteMatrixGroup, n: int) -> np.ndarray:
    return np.array([char_sym_power(g, n) for g in grp])


def invariant_dimension(grp: FiniteMatrixGroup, n: int) -> int:
    """``dim S^n(C^2)^G`` as the group average of the character."""
    avg = character_table(grp, n).sum() / grp.order
    return _round_checked([avg], grp.pol, f"invariant_dimension(n={n})")[0]


def hom_dimension(grp: FiniteMatrixGroup, m: int, n: int) -> int:
    """``dim Hom_G(S^m, S^n)`` from the inner product of characters."""
    chi_m = character_table(grp, m)
    chi_n = character_table(grp, n)
    avg = np.sum(chi_n * chi_m.conj()) / grp.order
    return _round_checked([avg], grp.pol, f"hom_dimension(m={m}, n={n})")[0]


def clebsch_gordan_check(grp: FiniteMatrixGroup, k: int) -> bool:
    """``S^1 (x) S^{2k-1} = S^{2k} + S^{2k-2}`` at the level of characters."""
    if k < 1:
        raise ValueError("k must be >= 1")
    for g in grp:
        lhs = char_sym_power(g, 1) * char_sym_power(g, 2 * k - 1)
        rhs = char_sym_power(g, 2 * k) + char_sym_power(g, 2 * k - 2)
        if abs(lhs - rhs) > grp.pol.eq_tol:
            return False
    return True


def hom_dimensions_into_lowest(grp: FiniteMatrixGroup, kmax: int = 5) -> list[int]:
    """``dim Hom_G(S^{2k-1}, S^1)`` for ``k = 1..kmax``."""
    return [hom_dimension(grp, 2 * k - 1, 1) for k in range(1, kmax + 1)]
