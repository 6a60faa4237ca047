"""Spherical t-designs as an instance of the generalized design framework.

Here the local maps are point evaluation ``e_p(f) = f(p)`` and ``lambda_x(z) = z / |X|``,
and the target is the normalized sphere integral.  By linearity it is enough to
test monomials of degree at most ``t``.
"""

import itertools
from dataclasses import dataclass
from math import lgamma, exp, pi, sqrt

import numpy as np

from .design import check_tau_design
from .linalg import DEFAULT_POLICY, TolerancePolicy


@dataclass(frozen=True, eq=False)
class SpherePointSet:
    points: np.ndarray

    def __post_init__(self):
        pts = np.atleast_2d(np.asarray(self.points, dtype=float))
        if pts.ndim != 2 or pts.shape[0] < 1 or pts.shape[1] < 2:
            raise ValueError(f"need at least one point in R^n with n >= 2, got shape {pts.shape}")
        norms = np.linalg.norm(pts, axis=1)
        if np.max(np.abs(norms - 1)) > DEFAULT_POLICY.eq_tol:
            raise ValueError("all points must lie on the unit sphere")
        pts.setflags(write=False)
        object.__setattr__(self, "points", pts)

    @property
    def n(self) -> int:
        return self.points.shape[1]

    def __len__(self):
        return self.points.shape[0]

    @classmethod
    def normalized(cls, points):
        pts = np.asarray(points, dtype=float)
        return cls(pts / np.linalg.norm(pts, axis=1, keepdims=True))

    @classmethod
    def from_csv(cls, path):
        """Headerless CSV, one point per row; rows are normalized on load."""
        return cls.normalized(np.loadtxt(path, delimiter=",", ndmin=2))


def icosahedron_vertices() -> SpherePointSet:
    """The 12 vertices ``(0, +-1, +-phi)`` and cyclic shifts, on the unit sphere."""
    phi = (1 + sqrt(5)) / 2
    base = [(0, s1, s2 * phi) for s1 in (1, -1) for s2 in (1, -1)]
    pts = [np.roll(v, shift) for shift in range(3) for v in base]
    return SpherePointSet.normalized(pts)


def multidegrees(n: int, t: int):
    """All exponent tuples of length ``n`` with total degree ``<= t``."""
    for alpha in itertools.product(range(t + 1), repeat=n):
        if sum(alpha) <= t:
            yield alpha


def sphere_monomial_integral(n: int, alpha) -> float:
    """Average of ``x^alpha`` over ``S^{n-1}`` with respect to the normalized measure.

    Zero when any exponent is odd, otherwise
    ``Gamma(n/2) prod Gamma((a_i+1)/2) / (Gamma((n+|a|)/2) Gamma(1/2)^n)``.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    alpha = tuple(int(a) for a in alpha)
    if len(alpha) != n or any(a < 0 for a in alpha):
        raise ValueError(f"multidegree {alpha} does not fit dimension {n}")
    if any(a % 2 for a in alpha):
        return 0.0
    log = lgamma(n / 2) - lgamma((n + sum(alpha)) / 2)
    log += sum(lgamma((a + 1) / 2) for a in alpha) - n * 0.5 * np.log(pi)
    return exp(log)


def monomial_average(X: SpherePointSet, alpha) -> float:
    return float(np.mean(np.prod(X.points ** np.asarray(alpha), axis=1)))


def design_deviations(X: SpherePointSet, t: int) -> dict:
    """``|average - integral|`` for every monomial of degree ``<= t``."""
    return {
        alpha: abs(monomial_average(X, alpha) - sphere_monomial_integral(X.n, alpha))
        for alpha in multidegrees(X.n, t)
    }


def spherical_design_check(X: SpherePointSet, t: int, pol: TolerancePolicy = DEFAULT_POLICY) -> bool:
    if t < 0:
        raise ValueError("t must be non-negative")
    return all(d < pol.eq_tol for d in design_deviations(X, t).values())


def as_tau_design(X: SpherePointSet, t: int, pol: TolerancePolicy = DEFAULT_POLICY):
    """Run the generic design check with evaluation maps and equal weights.

    Test inputs are the monomials of degree ``<= t``, represented by their
    exponent tuples.
    """
    pts = [tuple(p) for p in X.points]
    N = len(pts)
    return check_tau_design(
        tau=lambda alpha: np.array([sphere_monomial_integral(X.n, alpha)]),
        points=pts,
        e=lambda x, alpha: float(np.prod(np.asarray(x) ** np.asarray(alpha))),
        lam=lambda x, z: np.array([z / N]),
        test_inputs=list(multidegrees(X.n, t)),
        tol=pol.eq_tol,
    )


def strength(X: SpherePointSet, tmax: int = 20, pol: TolerancePolicy = DEFAULT_POLICY) -> int:
    """Largest ``t <= tmax`` for which ``X`` is a spherical t-design."""
    t = 0
    while t < tmax and spherical_design_check(X, t + 1, pol):
        t += 1
    return t
