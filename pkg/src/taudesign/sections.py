"""Polynomial model of the truncated section space of the tautological bundle.

A section ``s`` of the tautological line bundle over CP^1 is stored via its
weight function ``f`` on the unit sphere of C^2: ``s(l) = f(u) u`` for any
unit ``u`` spanning ``l``, where ``f(zeta u) = zeta^{-1} f(u)``.  Polynomials
of bidegree ``(4, 5)`` in ``(u, conj(u))`` have exactly this weight, and on the
sphere they span the sum of the first five irreducible summands, of
dimensions 2, 4, 6, 8, 10.

Bidegree ``(p, q)`` coefficients are indexed by ``(a, c)`` for the monomial
``u1^a u2^(p-a) ub1^c ub2^(q-c)``; flattened vectors use index
``a * (q + 1) + c``.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import comb

import numpy as np

from .group import GroupElement, ProjectivePoint
from .linalg import (
    DEFAULT_POLICY,
    ModelConsistencyError,
    TolerancePolicy,
    kernel_basis,
    matrix_rank,
)

P, Q = 4, 5  # bidegree of the truncated model
DIM = (P + 1) * (Q + 1)
KMAX = 5


def monomial_basis(p: int, q: int) -> list[tuple[int, int, int, int]]:
    """Exponent tuples ``(a, b, c, d)`` of ``u1, u2, ub1, ub2``, ordered by ``(a, c)``."""
    return [(a, p - a, c, q - c) for a in range(p + 1) for c in range(q + 1)]


def laplacian_matrix(p: int, q: int) -> np.ndarray:
    """Matrix of ``d^2/du1 dub1 + d^2/du2 dub2`` from bidegree ``(p, q)`` to ``(p-1, q-1)``."""
    if p < 1 or q < 1:
        raise ValueError("Laplacian needs p, q >= 1")
    out = np.zeros((p * q, (p + 1) * (q + 1)), dtype=complex)
    for j, (a, b, c, d) in enumerate(monomial_basis(p, q)):
        if a and c:
            out[(a - 1) * q + (c - 1), j] += a * c
        if b and d:
            out[a * q + c, j] += b * d
    return out


def embed(coeffs, p: int, q: int, P_: int = P, Q_: int = Q) -> np.ndarray:
    """Multiply a bidegree ``(p, q)`` polynomial by ``|u|^{2m}`` to reach ``(P_, Q_)``."""
    m = P_ - p
    if m < 0 or Q_ - q != m:
        raise ValueError(f"cannot embed bidegree ({p},{q}) into ({P_},{Q_})")
    src = np.asarray(coeffs, dtype=complex).reshape(p + 1, q + 1)
    dst = np.zeros((P_ + 1, Q_ + 1), dtype=complex)
    # |u|^2m = sum_j C(m, j) (u1 ub1)^j (u2 ub2)^(m-j)
    for j in range(m + 1):
        dst[j : j + p + 1, j : j + q + 1] += comb(m, j) * src
    return dst.reshape(-1)


@dataclass(frozen=True, eq=False)
class SummandBasis:
    """Spanning vectors (as columns) of the embedded ``2k``-dimensional summand."""

    k: int
    vectors: np.ndarray

    @property
    def dim(self) -> int:
        return self.vectors.shape[1]


def harmonic_summand_basis(k: int, pol: TolerancePolicy = DEFAULT_POLICY) -> SummandBasis:
    """Harmonics of bidegree ``(k-1, k)`` embedded into the ``(4, 5)`` model."""
    if not 1 <= k <= KMAX:
        raise ValueError(f"k must be in 1..{KMAX}")
    p, q = k - 1, k
    if p == 0:
        harmonics = list(np.eye(q + 1, dtype=complex))
    else:
        harmonics = kernel_basis(laplacian_matrix(p, q), pol)
    if len(harmonics) != 2 * k:
        raise ModelConsistencyError(
            f"harmonic space of bidegree ({p},{q}) has dim {len(harmonics)}, expected {2 * k}"
        )
    vecs = np.column_stack([embed(h, p, q) for h in harmonics])
    vecs.setflags(write=False)
    return SummandBasis(k, vecs)


@lru_cache(maxsize=None)
def _summand_bases(eq_tol: float, rank_tol: float):
    pol = TolerancePolicy(eq_tol, rank_tol)
    return tuple(harmonic_summand_basis(k, pol) for k in range(1, KMAX + 1))


def summand_bases(pol: TolerancePolicy = DEFAULT_POLICY) -> list[SummandBasis]:
    return list(_summand_bases(pol.eq_tol, pol.rank_tol))


def adapted_basis(summands, pol: TolerancePolicy = DEFAULT_POLICY) -> np.ndarray:
    """Concatenate summand bases into a square change-of-basis matrix."""
    B = np.column_stack([s.vectors for s in summands])
    if B.shape[0] != B.shape[1] or matrix_rank(B, pol) != B.shape[0]:
        raise ModelConsistencyError(f"summand bases do not form a basis (shape {B.shape})")
    return B


def block_slices(summands):
    out, start = [], 0
    for s in summands:
        out.append(slice(start, start + s.dim))
        start += s.dim
    return out


def _sym_power_matrix(A: np.ndarray, p: int) -> np.ndarray:
    """Action of ``u -> A u`` on degree ``p`` monomials ``u1^a u2^(p-a)``.

    Column ``a`` holds the coefficients (in powers of ``u1``) of
    ``(A11 u1 + A12 u2)^a (A21 u1 + A22 u2)^(p-a)``.
    """
    l1 = np.array([A[0, 1], A[0, 0]])  # index = power of u1
    l2 = np.array([A[1, 1], A[1, 0]])
    out = np.zeros((p + 1, p + 1), dtype=complex)
    for a in range(p + 1):
        poly = np.ones(1, dtype=complex)
        for _ in range(a):
            poly = np.convolve(poly, l1)
        for _ in range(p - a):
            poly = np.convolve(poly, l2)
        out[:, a] = poly
    return out


def rep_matrix(g, p: int = P, q: int = Q) -> np.ndarray:
    """Matrix of ``f -> f o g^{-1}`` on bidegree ``(p, q)`` polynomials.

    ``u`` is substituted by ``g^{-1} u`` and ``conj(u)`` by ``conj(g^{-1}) conj(u)``.
    """
    m = g.matrix if isinstance(g, GroupElement) else np.asarray(g, dtype=complex)
    ginv = np.linalg.inv(m)
    return np.kron(_sym_power_matrix(ginv, p), _sym_power_matrix(ginv.conj(), q))


def evaluation_row(u, p: int = P, q: int = Q) -> np.ndarray:
    """Row vector ``r`` with ``r @ coeffs = f(u, conj(u))``."""
    u = np.asarray(u, dtype=complex)
    ub = u.conj()
    pu = np.array([u[0] ** a * u[1] ** (p - a) for a in range(p + 1)])
    pub = np.array([ub[0] ** c * ub[1] ** (q - c) for c in range(q + 1)])
    return np.outer(pu, pub).reshape(-1)


def evaluate_at(s, u) -> complex:
    """Weight function of ``s`` at an explicit (not necessarily canonical) vector ``u``."""
    return complex(evaluation_row(u) @ np.asarray(s, dtype=complex))


def evaluate_weight_function(s, x: ProjectivePoint) -> complex:
    """Fiber coordinate of ``s`` at ``x`` w.r.t. the canonical unit representative."""
    return evaluate_at(s, x.unit_rep)


def lambda_vector(u) -> np.ndarray:
    """Section ``l -> 2 pr_l(u)`` for a unit vector ``u``, unscaled.

    Its weight function is ``2 <u, v> = 2 (u1 vb1 + u2 vb2)`` in the variable ``v``,
    embedded into bidegree ``(4, 5)``.
    """
    u = np.asarray(u, dtype=complex)
    return embed(2 * np.array([u[1], u[0]]), 0, 1)  # index c: power of vb1


def lambda_section(x: ProjectivePoint, c: complex) -> np.ndarray:
    return c * lambda_vector(x.unit_rep)


def u1_weight_spectrum(theta: float) -> np.ndarray:
    """Eigenvalues of the model representation at ``diag(e^{i theta}, e^{-i theta})``."""
    g = np.diag([np.exp(1j * theta), np.exp(-1j * theta)])
    return np.linalg.eigvals(rep_matrix(g))


def expected_weights(kmax: int = KMAX) -> list[int]:
    """U(1) weights of ``S^1 + S^3 + ... + S^(2 kmax - 1)``, with multiplicity."""
    return sorted(n - 2 * j for k in range(1, kmax + 1) for n in [2 * k - 1] for j in range(n + 1))


def summand_traces(g, summands, pol: TolerancePolicy = DEFAULT_POLICY) -> list[complex]:
    """Trace of ``rep_matrix(g)`` on each summand, in the adapted basis."""
    B = adapted_basis(summands, pol)
    blocks = np.linalg.solve(B, rep_matrix(g) @ B)
    return [complex(np.trace(blocks[sl, sl])) for sl in block_slices(summands)]


def section_u1_weight(s, u, theta: float) -> complex:
    """Ratio ``f(e^{i theta} u) / f(u)``; equals ``e^{-i theta}`` for every section."""
    return evaluate_at(s, np.exp(1j * theta) * np.asarray(u)) / evaluate_at(s, u)
