"""Matrix-group arithmetic for SL(n,C), GL(n,C) and PGL(2,C).

Elements are plain complex matrices tagged with a :class:`GroupContext`.
PGL(2) is realized as 2x2 invertible matrices compared up to a nonzero
scalar, which is all the projective machinery the rest of the package
needs.  Every sampling routine is deterministic for a fixed seed.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "ContextMismatchError",
    "GroupContext",
    "GroupElement",
    "Tolerance",
    "DEFAULT_TOL",
    "sl",
    "gl",
    "pgl2",
    "identity",
    "commutator",
    "conjugate",
    "element_distance",
    "group_equal",
    "torsion_order",
    "structure_elements",
    "sample_element",
]

_FAMILIES = ("SL", "GL", "PGL")

# Construction-time determinant sanity; much looser than equality tolerances
# because long twist products accumulate roundoff in the determinant.
_DET_CHECK_TOL = 1e-6


class ContextMismatchError(ValueError):
    """Raised when two elements from different group contexts are combined."""


@dataclass(frozen=True)
class GroupContext:
    """Which matrix group we are working in, with derived structure data.

    ``dim`` is complex dimension, ``rank`` the rank, ``center_dim`` the
    complex dimension of the center, ``compact_dim`` the real dimension of a
    maximal compact subgroup.
    """

    family: str
    n: int

    def __post_init__(self) -> None:
        if self.family not in _FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; expected one of {_FAMILIES}")
        if self.n < 2:
            raise ValueError("matrix size must be at least 2")
        if self.family == "PGL" and self.n != 2:
            raise ValueError("PGL is only supported for n = 2")

    @property
    def dim(self) -> int:
        if self.family == "SL":
            return self.n * self.n - 1
        if self.family == "GL":
            return self.n * self.n
        return 3  # PGL(2)

    @property
    def rank(self) -> int:
        if self.family == "SL":
            return self.n - 1
        if self.family == "GL":
            return self.n
        return 1  # PGL(2)

    @property
    def center_dim(self) -> int:
        return 1 if self.family == "GL" else 0

    @property
    def compact_dim(self) -> int:
        # SU(n), U(n) and PSU(2) respectively.
        if self.family == "SL":
            return self.n * self.n - 1
        if self.family == "GL":
            return self.n * self.n
        return 3

    @property
    def projective(self) -> bool:
        return self.family == "PGL"

    def __repr__(self) -> str:
        return f"{self.family}({self.n})"


def sl(n: int) -> GroupContext:
    return GroupContext("SL", n)


def gl(n: int) -> GroupContext:
    return GroupContext("GL", n)


def pgl2() -> GroupContext:
    return GroupContext("PGL", 2)


@dataclass(frozen=True)
class Tolerance:
    """Numerical thresholds shared across the package.

    ``eq_tol`` bounds the relative Frobenius distance used for element
    equality, ``rank_tol`` is the singular-value ratio cutoff for numerical
    rank decisions, ``solver_tol`` the residual target for iterative solvers.
    """

    eq_tol: float = 1e-9
    rank_tol: float = 1e-7
    solver_tol: float = 1e-8

    def __post_init__(self) -> None:
        if min(self.eq_tol, self.rank_tol, self.solver_tol) <= 0:
            raise ValueError("tolerances must be strictly positive")
        if self.eq_tol >= 1e-3:
            raise ValueError("eq_tol must be below 1e-3")


DEFAULT_TOL = Tolerance()


@dataclass(frozen=True, eq=False)
class GroupElement:
    """A square complex matrix interpreted in a group context."""

    ctx: GroupContext
    mat: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        m = np.array(self.mat, dtype=complex)
        if m.shape != (self.ctx.n, self.ctx.n):
            raise ValueError(f"expected a {self.ctx.n}x{self.ctx.n} matrix, got shape {m.shape}")
        det = np.linalg.det(m)
        if self.ctx.family == "SL":
            if abs(det - 1.0) > _DET_CHECK_TOL:
                raise ValueError(f"determinant {det} is not 1 within {_DET_CHECK_TOL}")
        elif abs(det) < 1e-12:
            raise ValueError("matrix is numerically singular")
        m.setflags(write=False)
        object.__setattr__(self, "mat", m)

    def inv(self) -> "GroupElement":
        return GroupElement(self.ctx, np.linalg.inv(self.mat))

    def power(self, k: int) -> "GroupElement":
        return GroupElement(self.ctx, np.linalg.matrix_power(self.mat, k))

    def __matmul__(self, other: "GroupElement") -> "GroupElement":
        _check_ctx(self, other)
        return GroupElement(self.ctx, self.mat @ other.mat)

    def __repr__(self) -> str:
        return f"GroupElement({self.ctx}, {np.array2string(self.mat, precision=4)})"


def _check_ctx(a: GroupElement, b: GroupElement) -> None:
    if a.ctx != b.ctx:
        raise ContextMismatchError(f"{a.ctx} vs {b.ctx}")


def identity(ctx: GroupContext) -> GroupElement:
    return GroupElement(ctx, np.eye(ctx.n, dtype=complex))


def commutator(a: GroupElement, b: GroupElement) -> GroupElement:
    """a b a^-1 b^-1 in the shared context."""
    _check_ctx(a, b)
    ainv = np.linalg.inv(a.mat)
    binv = np.linalg.inv(b.mat)
    return GroupElement(a.ctx, a.mat @ b.mat @ ainv @ binv)


def conjugate(g: GroupElement, h: GroupElement) -> GroupElement:
    """The dot action g.h = g h g^-1."""
    _check_ctx(g, h)
    return GroupElement(g.ctx, g.mat @ h.mat @ np.linalg.inv(g.mat))


def element_distance(a: GroupElement, b: GroupElement) -> float:
    """The metric behind ``group_equal``.

    SL/GL: Frobenius distance relative to the larger norm.  PGL: distance
    between the projective classes, i.e. the Frobenius distance after unit
    normalization, minimized over a global phase (closed form via the
    Frobenius inner product).
    """
    _check_ctx(a, b)
    if a.ctx.projective:
        am = a.mat / np.linalg.norm(a.mat)
        bm = b.mat / np.linalg.norm(b.mat)
        inner = np.vdot(am, bm)
        if abs(inner) < 1e-300:
            return math.sqrt(2.0)
        # optimal aligning phase; direct subtraction keeps full precision near 0
        return float(np.linalg.norm(am - (np.conj(inner) / abs(inner)) * bm))
    scale = max(1.0, np.linalg.norm(a.mat), np.linalg.norm(b.mat))
    return float(np.linalg.norm(a.mat - b.mat) / scale)


def group_equal(a: GroupElement, b: GroupElement, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Equality in the group: exact for SL/GL, scalar-projective for PGL."""
    return element_distance(a, b) < tol.eq_tol


def is_identity(g: GroupElement, tol: Tolerance = DEFAULT_TOL) -> bool:
    return group_equal(g, identity(g.ctx), tol)


def torsion_order(g: GroupElement, max_order: int, tol: Tolerance = DEFAULT_TOL) -> int | None:
    """Smallest m <= max_order with g^m = e, or None.

    Uses projective identity for PGL.  A matrix whose eigenvalue moduli are
    visibly off the unit circle (beyond sqrt(eq_tol)) cannot be torsion and
    is rejected without powering.
    """
    if max_order < 1:
        raise ValueError("max_order must be at least 1")
    moduli = np.abs(np.linalg.eigvals(g.mat))
    screen = math.sqrt(tol.eq_tol)
    if g.ctx.projective:
        if moduli.max() / moduli.min() - 1.0 > screen:
            return None
    elif np.max(np.abs(moduli - 1.0)) > screen:
        return None
    e = identity(g.ctx)
    acc = g
    for m in range(1, max_order + 1):
        if group_equal(acc, e, tol):
            return m
        acc = acc @ g
    return None


def _det_normalize(mat: np.ndarray, ctx: GroupContext) -> np.ndarray:
    """Scale to determinant 1 for SL contexts; leave GL/PGL alone."""
    if ctx.family != "SL":
        return mat
    det = np.linalg.det(mat)
    return mat / det ** (1.0 / ctx.n)


def _haar_unitary(n: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-distributed U(n) matrix via phase-corrected QR of a Ginibre matrix."""
    z = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / math.sqrt(2.0)
    q, r = np.linalg.qr(z)
    phases = np.diag(r).copy()
    phases /= np.abs(phases)
    return q * phases


def structure_elements(ctx: GroupContext, kind: str, seed: int = 0) -> list[GroupElement]:
    """Structured subsets of the group: Weyl representatives, center, Cartan samples.

    ``weyl``: a full set of representatives of the Weyl group, as signed
    permutation matrices normalizing the diagonal Cartan (determinant
    corrected for SL).  ``center``: all central elements for SL (n-th roots
    of unity times the identity), the identity class for PGL(2), and sampled
    points of the one-parameter scalar center for GL.  ``cartan_sample``:
    random diagonal elements of the context.
    """
    rng = np.random.default_rng(seed)
    n = ctx.n
    if kind == "weyl":
        if ctx.projective:
            return [identity(ctx), GroupElement(ctx, np.array([[0, 1], [-1, 0]], dtype=complex))]
        out = []
        for perm in itertools.permutations(range(n)):
            m = np.zeros((n, n), dtype=complex)
            for j, i in enumerate(perm):
                m[i, j] = 1.0
            if ctx.family == "SL" and np.linalg.det(m).real < 0:
                m[perm[0], 0] = -1.0
            out.append(GroupElement(ctx, m))
        return out
    if kind == "center":
        if ctx.family == "SL":
            return [
                GroupElement(ctx, np.exp(2j * math.pi * k / n) * np.eye(n))
                for k in range(n)
            ]
        if ctx.projective:
            return [identity(ctx)]
        # GL: the center is the one-parameter family {c I : c != 0}; return
        # sampled representative points.
        out = []
        for _ in range(5):
            c = np.exp(rng.normal(scale=0.5) + 1j * rng.uniform(0.0, 2.0 * math.pi))
            out.append(GroupElement(ctx, c * np.eye(n)))
        return out
    if kind == "cartan_sample":
        out = []
        for _ in range(4):
            logs = rng.normal(scale=0.5, size=n) + 1j * rng.uniform(0.0, 2.0 * math.pi, size=n)
            diag = np.exp(logs)
            m = np.diag(diag)
            out.append(GroupElement(ctx, _det_normalize(m, ctx)))
        return out
    raise ValueError(f"unsupported structure kind {kind!r} for {ctx}")


def sample_element(
    ctx: GroupContext,
    mode: str,
    seed: int,
    max_order: int | None = None,
) -> GroupElement:
    """Seed-deterministic random element.

    ``haar_unitary``: Haar element of the maximal compact subgroup.
    ``torsion_unitary``: a compact element of exact finite order at most
    ``max_order`` (a random unitary conjugate of a diagonal matrix of roots
    of unity, determinant-corrected for SL).  ``generic``: Gaussian entries
    regularized to the context.
    """
    rng = np.random.default_rng(seed)
    n = ctx.n
    if mode == "haar_unitary":
        u = _haar_unitary(n, rng)
        return GroupElement(ctx, _det_normalize(u, ctx))
    if mode == "torsion_unitary":
        if max_order is None or max_order < 2:
            raise ValueError("torsion_unitary requires max_order >= 2")
        m = int(rng.integers(2, max_order + 1))
        if ctx.projective:
            # diag(w, 1/w) with w a primitive 2m-th root has projective order m.
            j = int(rng.integers(1, m))
            j = j if math.gcd(j, m) == 1 else 1
            w = np.exp(1j * math.pi * j / m)
            diag = np.array([w, 1.0 / w])
        else:
            exps = rng.integers(0, m, size=n)
            if ctx.family == "SL":
                exps[-1] = (-int(exps[:-1].sum())) % m
            if not exps.any():
                exps[0] = 1
                exps[-1] = m - 1 if ctx.family == "SL" else exps[-1]
            diag = np.exp(2j * math.pi * exps / m)
        u = _haar_unitary(n, rng)
        return GroupElement(ctx, u @ np.diag(diag) @ u.conj().T)
    if mode == "generic":
        while True:
            z = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
            if abs(np.linalg.det(z)) > 1e-6:
                return GroupElement(ctx, _det_normalize(z, ctx))
    raise ValueError(f"unsupported sampling mode {mode!r}")
