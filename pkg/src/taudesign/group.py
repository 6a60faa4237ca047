"""Finite subgroups of SU(2) and their action on the projective line.

The binary icosahedral group is generated from three explicit 2x2 matrices
``S``, ``T``, ``U`` built from a primitive fifth root of unity.  Elements are
kept in floating point; two elements are equal when their entrywise distance
is below ``eq_tol``.
"""

from collections import deque
from dataclasses import dataclass, field

import numpy as np

from .linalg import DEFAULT_POLICY, PreconditionError, TolerancePolicy, as_matrix


class GroupNotFiniteError(RuntimeError):
    """Closure did not terminate below the element cap."""


def _sort_key(m: np.ndarray):
    flat = np.round(np.asarray(m).reshape(-1), 12) + 0.0  # kill negative zeros
    return tuple(x for z in flat for x in (z.real + 0.0, z.imag + 0.0))


@dataclass(frozen=True, eq=False)
class GroupElement:
    """A 2x2 special unitary matrix."""

    matrix: np.ndarray

    def __post_init__(self):
        m = as_matrix(self.matrix)
        if m.shape != (2, 2):
            raise ValueError(f"group elements are 2x2, got {m.shape}")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @classmethod
    def checked(cls, m, pol: TolerancePolicy = DEFAULT_POLICY):
        g = cls(m)
        if not g.is_special_unitary(pol):
            raise ValueError("matrix is not in SU(2) to tolerance")
        return g

    def is_special_unitary(self, pol: TolerancePolicy = DEFAULT_POLICY) -> bool:
        m = self.matrix
        unitary = np.max(np.abs(m @ m.conj().T - np.eye(2))) < pol.eq_tol
        return bool(unitary and abs(np.linalg.det(m) - 1) < pol.eq_tol)

    def __matmul__(self, other: "GroupElement") -> "GroupElement":
        return GroupElement(self.matrix @ other.matrix)

    def __neg__(self):
        return GroupElement(-self.matrix)

    def inverse(self) -> "GroupElement":
        # unitary, so the inverse is the conjugate transpose
        return GroupElement(self.matrix.conj().T)

    def close_to(self, other: "GroupElement", tol: float) -> bool:
        return bool(np.max(np.abs(self.matrix - other.matrix)) < tol)

    def __repr__(self):
        return f"GroupElement({np.array2string(self.matrix, precision=4)})"


IDENTITY = GroupElement(np.eye(2))


class FiniteMatrixGroup:
    """A finite set of SU(2) elements closed under products, canonically sorted.

    Elements are ordered lexicographically on their entries rounded to 12
    decimals (real part before imaginary), so every reduction over the group
    runs in the same order.
    """

    def __init__(self, elements, pol: TolerancePolicy = DEFAULT_POLICY):
        self.pol = pol
        self.elements = sorted(elements, key=lambda g: _sort_key(g.matrix))
        self._stack = np.array([g.matrix for g in self.elements]).reshape(-1, 2, 2)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    def index_of(self, g: GroupElement) -> int:
        """Position of ``g`` in canonical order, or -1 if absent."""
        if not self.elements:
            return -1
        d = np.max(np.abs(self._stack - g.matrix).reshape(len(self), -1), axis=1)
        i = int(np.argmin(d))
        return i if d[i] < self.pol.eq_tol else -1

    def __contains__(self, g: GroupElement) -> bool:
        return self.index_of(g) >= 0

    def is_closed(self) -> bool:
        return all((a @ b) in self for a in self for b in self) and all(
            g.inverse() in self for g in self
        )

    def matrices(self) -> np.ndarray:
        """All elements stacked into an ``(order, 2, 2)`` array."""
        return self._stack.copy()

    def __repr__(self):
        return f"FiniteMatrixGroup(order={self.order})"


def icosahedral_generators(eps_index: int = 1):
    """The generators ``S, T, U`` of the binary icosahedral group.

    ``eps_index`` picks the primitive fifth root ``eps = exp(2*pi*i*eps_index/5)``.
    """
    if eps_index not in (1, 2, 3, 4):
        raise ValueError(f"eps_index must be in 1..4, got {eps_index}")
    eps = np.exp(2j * np.pi * eps_index / 5)
    S = np.diag([eps**3, eps**2])
    c = eps + eps**4
    T = np.array([[c, 1], [1, -c]]) / (eps**2 - eps**3)
    U = np.array([[0, 1], [-1, 0]], dtype=complex)
    return GroupElement(S), GroupElement(T), GroupElement(U)


def generate_closure(
    generators, cap: int = 10000, pol: TolerancePolicy = DEFAULT_POLICY
) -> FiniteMatrixGroup:
    """Breadth-first closure of ``generators`` under right multiplication.

    Raises ``GroupNotFiniteError`` once more than ``cap`` distinct elements
    have been found.
    """
    gens = []
    for g in generators:
        g = g if isinstance(g, GroupElement) else GroupElement(g)
        if not g.is_special_unitary(pol):
            raise ValueError(f"generator {g!r} is not special unitary")
        gens.append(g)

    found = [IDENTITY]
    stack = [IDENTITY.matrix]
    queue = deque([IDENTITY])
    while queue:
        h = queue.popleft()
        for g in gens:
            x = h @ g
            arr = np.array(stack)
            if np.min(np.max(np.abs(arr - x.matrix).reshape(len(arr), -1), axis=1)) < pol.eq_tol:
                continue
            found.append(x)
            stack.append(x.matrix)
            if len(found) > cap:
                raise GroupNotFiniteError(
                    f"closure exceeded {cap} elements; not finite at eq_tol={pol.eq_tol}"
                )
            queue.append(x)
    return FiniteMatrixGroup(found, pol)


def binary_icosahedral_group(eps_index: int = 1, pol: TolerancePolicy = DEFAULT_POLICY):
    return generate_closure(list(icosahedral_generators(eps_index)), pol=pol)


def trivial_group(pol: TolerancePolicy = DEFAULT_POLICY):
    return FiniteMatrixGroup([IDENTITY], pol)


@dataclass(frozen=True, eq=False)
class ProjectivePoint:
    """A complex line in C^2, stored by a unit vector with canonical phase.

    The first component of modulus above ``eq_tol`` is made real positive
    (the second one if the first is negligible).
    """

    unit_rep: np.ndarray
    tol: float = field(default=DEFAULT_POLICY.eq_tol, repr=False)

    def __post_init__(self):
        v = np.asarray(self.unit_rep, dtype=complex).reshape(2)
        n = np.linalg.norm(v)
        if not np.isfinite(n) or n < self.tol:
            raise ValueError("cannot span a line with a (near) zero vector")
        v = v / n
        pivot = v[0] if abs(v[0]) > self.tol else v[1]
        v = v * (abs(pivot) / pivot)
        v.setflags(write=False)
        object.__setattr__(self, "unit_rep", v)

    def same_line(self, other: "ProjectivePoint", tol: float | None = None) -> bool:
        tol = self.tol if tol is None else tol
        return bool(abs(np.vdot(other.unit_rep, self.unit_rep)) > 1 - tol)

    def __repr__(self):
        return f"ProjectivePoint({np.array2string(self.unit_rep, precision=4)})"


X0 = ProjectivePoint(np.array([1.0, 0.0]))


def act_on_point(g: GroupElement, p: ProjectivePoint) -> ProjectivePoint:
    return ProjectivePoint(g.matrix @ p.unit_rep, tol=p.tol)


def stabilizer(grp: FiniteMatrixGroup, p: ProjectivePoint) -> FiniteMatrixGroup:
    """Elements ``g`` with ``g . p = p`` as lines."""
    u = p.unit_rep
    fixing = [g for g in grp if abs(np.vdot(u, g.matrix @ u)) > 1 - grp.pol.eq_tol]
    return FiniteMatrixGroup(fixing, grp.pol)


def coset_representatives(grp: FiniteMatrixGroup, sub: FiniteMatrixGroup) -> list[GroupElement]:
    """One element from each left coset ``g . sub``; the identity comes first."""
    if any(h not in grp for h in sub):
        raise PreconditionError("subgroup is not contained in the group")
    if IDENTITY not in sub or any((a @ b) not in sub for a in sub for b in sub):
        raise PreconditionError("second argument is not a subgroup")
    if grp.order % sub.order:
        raise PreconditionError("subgroup order does not divide group order")

    covered = np.zeros(grp.order, dtype=bool)
    reps = []
    for g in [IDENTITY] + list(grp):
        i = grp.index_of(g)
        if covered[i]:
            continue
        reps.append(grp[i])
        for h in sub:
            covered[grp.index_of(grp[i] @ h)] = True
    assert len(reps) * sub.order == grp.order
    return reps


def orbit(grp: FiniteMatrixGroup, p: ProjectivePoint) -> list[ProjectivePoint]:
    """Distinct points ``g . p`` in order of first appearance over the group."""
    pts: list[ProjectivePoint] = []
    for g in grp:
        q = act_on_point(g, p)
        if not any(q.same_line(r, grp.pol.eq_tol) for r in pts):
            pts.append(q)
    return pts


def dump_group(grp: FiniteMatrixGroup) -> list[list[float]]:
    """Each element as 8 reals: row-major entries, real/imag interleaved."""
    out = []
    for g in grp:
        flat = g.matrix.reshape(-1)
        out.append([float(x) + 0.0 for z in flat for x in (z.real, z.imag)])
    return out


def load_group(rows, pol: TolerancePolicy = DEFAULT_POLICY) -> FiniteMatrixGroup:
    """Inverse of :func:`dump_group`."""
    elems = []
    for r in rows:
        if len(r) != 8:
            raise ValueError("each element needs exactly 8 reals")
        z = np.array(r[0::2]) + 1j * np.array(r[1::2])
        elems.append(GroupElement.checked(z.reshape(2, 2), pol))
    return FiniteMatrixGroup(elems, pol)


def random_su2(rng: np.random.Generator) -> GroupElement:
    """Haar-random element via a uniformly random unit quaternion."""
    q = rng.normal(size=4)
    a, b, c, d = q / np.linalg.norm(q)
    return GroupElement(np.array([[a + 1j * b, c + 1j * d], [-c + 1j * d, a - 1j * b]]))
