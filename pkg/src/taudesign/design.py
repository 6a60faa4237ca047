"""Generalized designs: operators written as finite sums of local maps.

A design for a linear map ``tau`` is a finite point set ``X`` with one map
``lambda_x`` per point such that ``tau(s) = sum_x lambda_x(e_x(s))``.
:func:`check_tau_design` verifies this identity for arbitrary callables; the
remaining functions build the concrete instance on the section model, where
averaging a single local operator over the binary icosahedral group yields
the projection onto the lowest summand.
"""

from dataclasses import dataclass, field

import numpy as np

from . import sections
from .group import (
    FiniteMatrixGroup,
    GroupElement,
    ProjectivePoint,
    act_on_point,
)
from .linalg import (
    DEFAULT_POLICY,
    PreconditionError,
    TolerancePolicy,
    frobenius_norm,
    ordered_sum,
)


def check_tau_design(tau, points, e, lam, test_inputs, tol: float = DEFAULT_POLICY.eq_tol):
    """Check ``tau(s) == sum_x lam(x, e(x, s))`` on every ``s`` in ``test_inputs``.

    It suffices to pass a basis of the domain, both sides being linear.

    Returns
    -------
    ok : bool
    residual : float
        Largest deviation seen, in the norm of the target space.
    """
    worst = 0.0
    for s in test_inputs:
        rhs = ordered_sum((lam(x, e(x, s)) for x in points), shape=np.shape(tau(s)))
        worst = max(worst, frobenius_norm(np.asarray(tau(s)) - rhs))
    return worst < tol, worst


@dataclass(frozen=True, eq=False)
class LocalDesignPair:
    """Points of CP^1 with a complex weight each; ``lambda_x = weight * lambda_0`` transported."""

    points: tuple = ()
    weights: tuple = ()
    tol: float = field(default=DEFAULT_POLICY.eq_tol, repr=False)

    def __post_init__(self):
        if len(self.points) != len(self.weights):
            raise ValueError("need exactly one weight per point")
        pts, ws = [], []
        for p, w in zip(self.points, self.weights):
            for i, q in enumerate(pts):
                if p.same_line(q, self.tol):
                    ws[i] += w
                    break
            else:
                pts.append(p)
                ws.append(complex(w))
        object.__setattr__(self, "points", tuple(pts))
        object.__setattr__(self, "weights", tuple(ws))

    @classmethod
    def single(cls, x: ProjectivePoint, weight: complex = 1.0):
        return cls((x,), (weight,))

    def __len__(self):
        return len(self.points)

    def __add__(self, other: "LocalDesignPair") -> "LocalDesignPair":
        return merge_pairs(self, other)

    def scaled(self, c: complex) -> "LocalDesignPair":
        return LocalDesignPair(self.points, tuple(c * w for w in self.weights), self.tol)


def merge_pairs(a: LocalDesignPair, b: LocalDesignPair) -> LocalDesignPair:
    """Union of point sets, adding the local maps on common points."""
    return LocalDesignPair(a.points + b.points, a.weights + b.weights, min(a.tol, b.tol))


def act_on_pair(g: GroupElement, pair: LocalDesignPair) -> LocalDesignPair:
    """Transport ``(X, lambda)`` to ``(gX, g . lambda)``.

    ``g . lambda_x`` is again ``2 pr_l`` at the point ``gx``; the product
    ``lambda_x o e_x`` does not depend on the phase of the representative,
    so only the point moves and the weight is kept.
    """
    return LocalDesignPair(
        tuple(act_on_point(g, x) for x in pair.points), pair.weights, pair.tol
    )


def orbit_sum(grp: FiniteMatrixGroup, pair: LocalDesignPair) -> LocalDesignPair:
    """``sum_g (gX, g lambda)`` as a merged pair (not normalized)."""
    out = LocalDesignPair(tol=pair.tol)
    for g in grp:
        out = merge_pairs(out, act_on_pair(g, pair))
    return out


def local_operator(pair: LocalDesignPair) -> np.ndarray:
    """Matrix of ``s -> sum_x w_x lambda_section(x, e_x(s))`` on the 30-dim model."""
    terms = (
        w * np.outer(sections.lambda_vector(x.unit_rep), sections.evaluation_row(x.unit_rep))
        for x, w in zip(pair.points, pair.weights)
    )
    return ordered_sum(terms, shape=(sections.DIM, sections.DIM))


def conjugate_operator(g, op: np.ndarray) -> np.ndarray:
    """``rho(g) op rho(g)^{-1}``."""
    g = g if isinstance(g, GroupElement) else GroupElement(g)
    return sections.rep_matrix(g) @ op @ sections.rep_matrix(g.inverse())


def orbit_average(grp: FiniteMatrixGroup, pair: LocalDesignPair) -> np.ndarray:
    """``(1/|G|) sum_g g . Psi``, summed in the group's canonical order."""
    op = local_operator(pair)
    return ordered_sum(conjugate_operator(g, op) for g in grp) / grp.order


def coset_reduced_operator(
    grp: FiniteMatrixGroup,
    stab: FiniteMatrixGroup,
    reps,
    pair: LocalDesignPair,
) -> np.ndarray:
    """Orbit average computed from one transported pair per coset of ``stab``.

    Requires every element of ``stab`` to fix ``local_operator(pair)``;
    raises ``PreconditionError`` otherwise.
    """
    if len(reps) * stab.order != grp.order:
        raise PreconditionError(
            f"{len(reps)} representatives x stabilizer order {stab.order} != {grp.order}"
        )
    op = local_operator(pair)
    for k in stab:
        drift = frobenius_norm(conjugate_operator(k, op) - op)
        if drift > grp.pol.eq_tol:
            raise PreconditionError(f"stabilizer element moves the local operator by {drift:.3g}")
    reduced = LocalDesignPair(tol=pair.tol)
    for g in reps:
        reduced = merge_pairs(reduced, act_on_pair(g, pair))
    return local_operator(reduced) / len(reps)


def equivariance_check(op, grp: FiniteMatrixGroup, pol: TolerancePolicy = DEFAULT_POLICY) -> bool:
    return max_commutator(op, grp) < pol.eq_tol


def max_commutator(op, grp: FiniteMatrixGroup) -> float:
    worst = 0.0
    for g in grp:
        r = sections.rep_matrix(g)
        worst = max(worst, frobenius_norm(r @ op - op @ r))
    return worst


def normalize_trace(pair: LocalDesignPair, target: complex = 2.0, pol=DEFAULT_POLICY):
    """Rescale all weights so that ``trace(local_operator(pair)) == target``."""
    tr = np.trace(local_operator(pair))
    if abs(tr) <= pol.rank_tol:
        raise PreconditionError("cannot normalize a pair whose local operator has zero trace")
    return pair.scaled(target / tr)


@dataclass
class DesignReport:
    trace: complex
    deviations: dict
    verdict: bool
    tol: float
    idempotence: float = float("nan")

    def to_json(self, **extra) -> dict:
        out = {
            "trace": [self.trace.real + 0.0, self.trace.imag + 0.0],
            "deviations": dict(self.deviations),
            "verdict": bool(self.verdict),
        }
        out.update(extra)
        return out

    def lines(self):
        yield f"trace        = {self.trace.real:+.12f} {self.trace.imag:+.3e}i"
        for key, val in self.deviations.items():
            yield f"{key:<12} = {val:.3e}"
        yield f"verdict      = {'PASS' if self.verdict else 'FAIL'} (tol {self.tol:g})"


def verify_tau_design(op, summands=None, pol: TolerancePolicy = DEFAULT_POLICY) -> DesignReport:
    """Compare ``op`` with the projection onto the first summand, block by block.

    In the summand-adapted basis the diagonal block of summand 1 must be the
    identity and all other blocks zero.  ``k1_vs_id`` and ``k2``..``k5``
    measure the diagonal blocks; ``leakage`` collects every off-diagonal
    block.
    """
    if summands is None:
        summands = sections.summand_bases(pol)
    B = sections.adapted_basis(summands, pol)
    blocks = np.linalg.solve(B, op @ B)
    slices = sections.block_slices(summands)

    dev = {}
    for s, sl in zip(summands, slices):
        diag = blocks[sl, sl]
        if s.k == 1:
            dev["k1_vs_id"] = frobenius_norm(diag - np.eye(s.dim))
        else:
            dev[f"k{s.k}"] = frobenius_norm(diag)
    off = blocks.copy()
    for sl in slices:
        off[sl, sl] = 0
    dev["leakage"] = frobenius_norm(off)

    ok = all(v < pol.eq_tol for v in dev.values())
    return DesignReport(
        trace=complex(np.trace(op)),
        deviations=dev,
        verdict=ok,
        tol=pol.eq_tol,
        idempotence=frobenius_norm(op @ op - op),
    )
