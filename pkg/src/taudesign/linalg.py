"""Small dense complex linear algebra with an explicit tolerance policy.

Matrices are plain ``numpy`` arrays of dtype ``complex128``; the helpers
here only add shape checking and the thresholds used across the package.
"""

import os
from dataclasses import dataclass

import numpy as np


class NumericalConsistencyError(ArithmeticError):
    """A quantity that must be an integer (a dimension) drifted off one."""


class ModelConsistencyError(RuntimeError):
    """The polynomial model disagrees with a structural fact it relies on."""


class PreconditionError(ValueError):
    """An operation's mathematical precondition is violated."""


@dataclass(frozen=True)
class TolerancePolicy:
    """Thresholds for entrywise equality and for rank decisions.

    ``eq_tol`` is used whenever two floating point objects are compared;
    ``rank_tol`` is the relative singular value cutoff for kernels.
    """

    eq_tol: float = 1e-8
    rank_tol: float = 1e-10

    def __post_init__(self):
        if not (0 < self.rank_tol <= self.eq_tol < 1):
            raise ValueError(
                f"need 0 < rank_tol <= eq_tol < 1, got rank_tol={self.rank_tol}, "
                f"eq_tol={self.eq_tol}"
            )

    @classmethod
    def from_env(cls, var="TAUDESIGN_TOL", **overrides):
        """Default policy with ``eq_tol`` read from ``$TAUDESIGN_TOL`` if set."""
        kwargs = {}
        raw = os.environ.get(var)
        if raw:
            kwargs["eq_tol"] = float(raw)
        kwargs.update({k: v for k, v in overrides.items() if v is not None})
        if "eq_tol" in kwargs and "rank_tol" not in kwargs:
            kwargs["rank_tol"] = min(cls.rank_tol, kwargs["eq_tol"])
        return cls(**kwargs)


DEFAULT_POLICY = TolerancePolicy()


def as_matrix(m) -> np.ndarray:
    """Coerce to a finite 2-d complex array, rejecting anything else."""
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2 or a.size == 0:
        raise ValueError(f"expected a non-empty 2-d matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix has non-finite entries")
    return a


def mat_mul(a, b) -> np.ndarray:
    a, b = as_matrix(a), as_matrix(b)
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"cannot multiply {a.shape} by {b.shape}")
    return a @ b


def kernel_basis(m, pol: TolerancePolicy = DEFAULT_POLICY) -> list[np.ndarray]:
    """Orthonormal basis of the numerical kernel of ``m``.

    A direction ``v`` is kept when its singular value is at most
    ``pol.rank_tol * ||m||_2``.  Returns an empty list for injective ``m``.
    """
    m = as_matrix(m)
    _, sv, vh = np.linalg.svd(m, full_matrices=True)
    norm = sv[0] if sv.size else 0.0
    ncols = m.shape[1]
    full = np.zeros(ncols)
    full[: sv.size] = sv
    null = full <= pol.rank_tol * norm
    return [vh[i].conj() for i in range(ncols) if null[i]]


def matrix_rank(m, pol: TolerancePolicy = DEFAULT_POLICY) -> int:
    m = as_matrix(m)
    return m.shape[1] - len(kernel_basis(m, pol))


def frobenius_distance(a, b) -> float:
    a, b = as_matrix(a), as_matrix(b)
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch {a.shape} vs {b.shape}")
    return float(np.sqrt(np.sum(np.abs(a - b) ** 2)))


def frobenius_norm(a) -> float:
    a = np.asarray(a, dtype=complex)
    return float(np.sqrt(np.sum(np.abs(a) ** 2)))


def trace(m) -> complex:
    m = as_matrix(m)
    if m.shape[0] != m.shape[1]:
        raise ValueError(f"trace of non-square matrix {m.shape}")
    return complex(np.trace(m))


def ordered_sum(terms, shape=None):
    """Sum arrays strictly left to right so results are bit-reproducible."""
    total = None
    for t in terms:
        total = np.array(t, dtype=complex) if total is None else total + t
    if total is None:
        if shape is None:
            raise ValueError("empty sum needs an explicit shape")
        return np.zeros(shape, dtype=complex)
    return total
