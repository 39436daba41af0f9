"""Representations of surface groups into matrix groups.

A representation is the tuple of its generator images.  Everything that
involves conjugacy classes is done through explicit witnesses: an element
conjugating one tuple to the other together with a residual certificate,
found as an invertible point of the intertwiner nullspace.  Quotient
coordinates are never constructed.

Numerical rank decisions use singular values with the ``rank_tol`` ratio
cutoff from :class:`~twistrep.groups.Tolerance`.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .groups import (
    DEFAULT_TOL,
    ContextMismatchError,
    GroupContext,
    GroupElement,
    Tolerance,
    commutator,
    conjugate,
    element_distance,
    group_equal,
    identity,
    sample_element,
    torsion_order,
)
from .words import Word, surface_relation

__all__ = [
    "Representation",
    "ConjugacyWitness",
    "FixGenerator",
    "FixCommutator",
    "evaluate",
    "relation_defect",
    "is_irreducible",
    "commutant_dimension",
    "conjugacy_witness",
    "character_fingerprint",
    "fingerprint_words",
    "tangent_dimension",
    "is_heuristically_dense",
    "conjugate_representation",
    "sample_representation",
    "sample_centralizer",
]


@dataclass(frozen=True, eq=False)
class Representation:
    """Images of the 2p surface-group generators; images[i] = rho(A_{i+1}).

    The plain constructor does not check the surface relation (twisting
    produces tuples that satisfy it by construction); use :meth:`from_images`
    or the JSON loader when the input is untrusted.
    """

    ctx: GroupContext
    genus: int
    images: tuple[GroupElement, ...]

    def __post_init__(self) -> None:
        if self.genus < 1:
            raise ValueError("genus must be at least 1")
        images = tuple(self.images)
        if len(images) != 2 * self.genus:
            raise ValueError(f"expected {2 * self.genus} images, got {len(images)}")
        for g in images:
            if g.ctx != self.ctx:
                raise ContextMismatchError(f"image context {g.ctx} != {self.ctx}")
        object.__setattr__(self, "images", images)

    @classmethod
    def from_images(
        cls,
        ctx: GroupContext,
        genus: int,
        images: tuple[GroupElement, ...],
        tol: Tolerance = DEFAULT_TOL,
    ) -> "Representation":
        rep = cls(ctx, genus, images)
        defect = relation_defect(rep)
        if defect >= tol.eq_tol:
            raise ValueError(f"surface relation violated: defect {defect:.3e} >= {tol.eq_tol:.1e}")
        return rep

    def image(self, generator: int) -> GroupElement:
        """rho(A_i) for 1-based generator index i."""
        return self.images[generator - 1]


@dataclass(frozen=True)
class ConjugacyWitness:
    """An explicit conjugator with its residual certificate."""

    element: GroupElement
    residual: float


def evaluate(rep: Representation, word: Word) -> GroupElement:
    """The homomorphic image of a word; the empty word maps to the identity."""
    if word.genus != rep.genus:
        raise ValueError(f"word genus {word.genus} != representation genus {rep.genus}")
    acc = np.eye(rep.ctx.n, dtype=complex)
    for letter in word.letters:
        m = rep.images[abs(letter) - 1].mat
        acc = acc @ (m if letter > 0 else np.linalg.inv(m))
    return GroupElement(rep.ctx, acc)


def relation_defect(rep: Representation) -> float:
    """Distance between the evaluated surface relation and the identity."""
    value = evaluate(rep, surface_relation(rep.genus))
    return element_distance(value, identity(rep.ctx))


def conjugate_representation(g: GroupElement, rep: Representation) -> Representation:
    """g.rho: conjugate every image by g."""
    return Representation(rep.ctx, rep.genus, tuple(conjugate(g, h) for h in rep.images))


# ---------------------------------------------------------------------------
# Lie algebra bases and linear-operator helpers.
#
# vec() is row-major, so vec(A X B) = kron(A, B.T) vec(X).


def _lie_basis(ctx: GroupContext) -> list[np.ndarray]:
    """Complex basis of the context's Lie algebra as n x n matrices.

    sl(n) (trace zero) for SL and PGL(2), all of gl(n) for GL.
    """
    n = ctx.n
    basis = []
    for i in range(n):
        for j in range(n):
            if i != j:
                e = np.zeros((n, n), dtype=complex)
                e[i, j] = 1.0
                basis.append(e)
    if ctx.family == "GL":
        for i in range(n):
            e = np.zeros((n, n), dtype=complex)
            e[i, i] = 1.0
            basis.append(e)
    else:
        for i in range(n - 1):
            e = np.zeros((n, n), dtype=complex)
            e[i, i] = 1.0
            e[i + 1, i + 1] = -1.0
            basis.append(e)
    return basis


def _ad_operator(mat: np.ndarray) -> np.ndarray:
    """Matrix of X -> M X M^-1 on row-major vec coordinates."""
    return np.kron(mat, np.linalg.inv(mat).T)


def _nullspace(matrix: np.ndarray, rank_tol: float) -> np.ndarray:
    """Orthonormal right-nullspace basis, columns; may have zero columns."""
    if matrix.size == 0:
        return np.eye(matrix.shape[1], dtype=complex)
    _, s, vh = np.linalg.svd(matrix)
    if s.size == 0 or s[0] == 0.0:
        return vh.conj().T
    rank = int(np.sum(s > rank_tol * s[0]))
    return vh[rank:].conj().T


def _numerical_rank(matrix: np.ndarray, rank_tol: float) -> int:
    if matrix.size == 0:
        return 0
    s = np.linalg.svd(matrix, compute_uv=False)
    if s.size == 0 or s[0] == 0.0:
        return 0
    return int(np.sum(s > rank_tol * s[0]))


def _unit_det_lift(mat: np.ndarray) -> np.ndarray:
    """One of the two determinant-1 lifts of a PGL(2) matrix."""
    return mat / np.sqrt(np.linalg.det(mat))


def commutant_dimension(rep: Representation, tol: Tolerance = DEFAULT_TOL) -> int:
    """Dimension of the joint centralizer of the images in the context's Lie algebra."""
    basis = _lie_basis(rep.ctx)
    blocks = []
    for g in rep.images:
        m = g.mat / np.linalg.norm(g.mat)
        minv = np.linalg.inv(m)
        cols = [(m @ b @ minv - b).reshape(-1) for b in basis]
        blocks.append(np.array(cols).T)
    stacked = np.vstack(blocks)
    return len(basis) - _numerical_rank(stacked, tol.rank_tol)


def is_irreducible(rep: Representation, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Whether the adjoint-fixed subalgebra is exactly the center of the Lie algebra."""
    return commutant_dimension(rep, tol) == rep.ctx.center_dim


# ---------------------------------------------------------------------------
# Conjugacy witnesses via intertwiner nullspaces.


def _intertwiner_basis(
    mats1: list[np.ndarray], mats2: list[np.ndarray], rank_tol: float
) -> np.ndarray:
    """Basis of {X : X M1_i = M2_i X for all i}, as columns of vec(X)."""
    n = mats1[0].shape[0]
    eye = np.eye(n, dtype=complex)
    rows = []
    for m1, m2 in zip(mats1, mats2):
        scale = max(np.linalg.norm(m1), np.linalg.norm(m2))
        rows.append((np.kron(eye, m1.T) - np.kron(m2, eye)) / scale)
    return _nullspace(np.vstack(rows), rank_tol)


def _invertible_from_nullspace(
    basis: np.ndarray, ctx: GroupContext, rng: np.random.Generator, retries: int = 32
) -> GroupElement | None:
    """Random invertible combination of a nullspace basis, det-normalized for SL.

    Invertible elements are generic in the intertwiner space whenever a
    conjugator exists, so a handful of random draws suffices.
    """
    n = ctx.n
    if basis.shape[1] == 0:
        return None
    for _ in range(retries):
        coeff = rng.standard_normal(basis.shape[1]) + 1j * rng.standard_normal(basis.shape[1])
        x = (basis @ coeff).reshape(n, n)
        s = np.linalg.svd(x, compute_uv=False)
        if s[-1] <= 1e-8 * s[0]:
            continue
        x = x / s[0]
        if ctx.family == "SL":
            x = x / np.linalg.det(x) ** (1.0 / n)
        return GroupElement(ctx, x)
    return None


def _witness_residual(x: GroupElement, rep1: Representation, rep2: Representation) -> float:
    return max(
        element_distance(conjugate(x, a), b) for a, b in zip(rep1.images, rep2.images)
    )


def _projective_intertwiner_spaces(
    mats1: list[np.ndarray], mats2: list[np.ndarray], rank_tol: float
) -> list[np.ndarray]:
    """Candidate intertwiner spaces for PGL(2) via sign branch-and-prune.

    Both tuples are replaced by determinant-1 lifts; a projective conjugator
    satisfies X M1_i = +- M2_i X with an a-priori unknown sign per generator.
    The sign patterns are explored generator by generator, discarding
    branches whose joint nullspace dies.
    """
    n = mats1[0].shape[0]
    eye = np.eye(n, dtype=complex)
    branches = [np.eye(n * n, dtype=complex)]
    for m1, m2 in zip(mats1, mats2):
        ops = (np.kron(eye, m1.T) - np.kron(m2, eye), np.kron(eye, m1.T) + np.kron(m2, eye))
        new_branches = []
        for q in branches:
            for op in ops:
                reduced = _nullspace(op @ q, rank_tol)
                if reduced.shape[1] > 0:
                    new_branches.append(q @ reduced)
        branches = new_branches
        if not branches:
            break
    return branches


def conjugacy_witness(
    rep1: Representation,
    rep2: Representation,
    tol: Tolerance = DEFAULT_TOL,
    seed: int = 0,
) -> ConjugacyWitness | None:
    """An element conjugating rep1 to rep2, or None.

    The intertwiner equations X rho1(A_i) = rho2(A_i) X are linear in X; the
    solution space is computed by a stacked nullspace and searched for an
    invertible point.  For PGL(2) the equations only hold up to a sign per
    generator on determinant-1 lifts, so all consistent sign patterns are
    pruned through.  Success requires the conjugation residual to meet
    ``solver_tol``.
    """
    if rep1.ctx != rep2.ctx:
        raise ContextMismatchError(f"{rep1.ctx} vs {rep2.ctx}")
    if rep1.genus != rep2.genus:
        raise ValueError("genus mismatch")
    ctx = rep1.ctx
    rng = np.random.default_rng(seed)
    if ctx.projective:
        mats1 = [_unit_det_lift(g.mat) for g in rep1.images]
        mats2 = [_unit_det_lift(g.mat) for g in rep2.images]
        best: ConjugacyWitness | None = None
        for space in _projective_intertwiner_spaces(mats1, mats2, tol.rank_tol):
            x = _invertible_from_nullspace(space, ctx, rng)
            if x is None:
                continue
            res = _witness_residual(x, rep1, rep2)
            if best is None or res < best.residual:
                best = ConjugacyWitness(x, res)
        if best is not None and best.residual < tol.solver_tol:
            return best
        return None
    mats1 = [g.mat for g in rep1.images]
    mats2 = [g.mat for g in rep2.images]
    basis = _intertwiner_basis(mats1, mats2, tol.rank_tol)
    x = _invertible_from_nullspace(basis, ctx, rng)
    if x is None:
        return None
    res = _witness_residual(x, rep1, rep2)
    if res < tol.solver_tol:
        return ConjugacyWitness(x, res)
    return None


# ---------------------------------------------------------------------------
# Character fingerprints.


def fingerprint_words(genus: int) -> list[Word]:
    """The fixed word list behind :func:`character_fingerprint`.

    All generators, all pairwise products A_i A_j (i < j), and the handle
    commutators [A_i, A_{p+i}].  Fixed and documented so that fingerprints
    are comparable across runs.
    """
    words = [Word(genus, (i,)) for i in range(1, 2 * genus + 1)]
    for i, j in itertools.combinations(range(1, 2 * genus + 1), 2):
        words.append(Word(genus, (i, j)))
    for i in range(1, genus + 1):
        words.append(Word(genus, (i, genus + i, -i, -(genus + i))))
    return words


def character_fingerprint(rep: Representation) -> np.ndarray:
    """Conjugation-invariant trace vector over the fixed word list.

    For PGL the scale-invariant normalization tr(M)^2 / det(M) replaces the
    trace.  Distinct fingerprints obstruct conjugacy; equal fingerprints
    prove nothing.
    """
    out = []
    for w in fingerprint_words(rep.genus):
        m = evaluate(rep, w).mat
        if rep.ctx.projective:
            out.append(np.trace(m) ** 2 / np.linalg.det(m))
        else:
            out.append(np.trace(m))
    return np.array(out)


# ---------------------------------------------------------------------------
# Tangent-space dimension of the relation variety.


@dataclass(frozen=True)
class FixGenerator:
    """Constraint: the direction at generator slot i (1-based, 1..2p) vanishes."""

    index: int


@dataclass(frozen=True)
class FixCommutator:
    """Constraint: the linearized handle commutator [A_i, A_{p+i}] vanishes.

    ``target`` documents the prescribed commutator value; it is checked
    against the representation but plays no role in the linear algebra.
    """

    handle: int
    target: GroupElement | None = None


def _commutator_blocks(rep: Representation, handle: int) -> tuple[np.ndarray, np.ndarray]:
    """Coefficient operators (on vec coordinates) of the handle-commutator
    right-logarithmic derivative:

        dC C^-1 = (1 - Ad(a b a^-1)) delta_a + (Ad(a) - Ad(C)) delta_b

    for C = a b a^-1 b^-1 with a = rho(A_i), b = rho(A_{p+i}).
    """
    p = rep.genus
    a = rep.images[handle - 1].mat
    b = rep.images[p + handle - 1].mat
    n = rep.ctx.n
    eye = np.eye(n * n, dtype=complex)
    aba = a @ b @ np.linalg.inv(a)
    c = commutator(rep.images[handle - 1], rep.images[p + handle - 1]).mat
    block_a = eye - _ad_operator(aba)
    block_b = _ad_operator(a) - _ad_operator(c)
    return block_a, block_b


def _relation_differential(rep: Representation) -> np.ndarray:
    """Differential of the relation map in right-translated coordinates.

    Rows are vec(gl(n)) coordinates of d(mu) mu^-1; columns run over the 2p
    generator slots times the Lie algebra basis.  Assembled from the product
    rule over the commutator factors, with each factor shifted by Ad of the
    product of the preceding commutators.
    """
    p = rep.genus
    n = rep.ctx.n
    basis = _lie_basis(rep.ctx)
    d = len(basis)
    basis_cols = np.array([b.reshape(-1) for b in basis]).T  # (n^2, d)
    cols = np.zeros((n * n, 2 * p * d), dtype=complex)
    prefix = np.eye(n, dtype=complex)
    for handle in range(1, p + 1):
        block_a, block_b = _commutator_blocks(rep, handle)
        shift = _ad_operator(prefix)
        cols[:, (handle - 1) * d : handle * d] = shift @ block_a @ basis_cols
        cols[:, (p + handle - 1) * d : (p + handle) * d] = shift @ block_b @ basis_cols
        prefix = prefix @ commutator(
            rep.images[handle - 1], rep.images[p + handle - 1]
        ).mat
    return cols


def tangent_dimension(
    rep: Representation,
    constraints: tuple = (),
    tol: Tolerance = DEFAULT_TOL,
) -> int:
    """Dimension of the linearized relation variety at rep, with constraints.

    Directions live in (Lie algebra)^{2p} via right translation.  The
    differential is assembled analytically; the test suite cross-validates
    it against central finite differences.  Complex dimensions throughout.
    """
    defect = relation_defect(rep)
    if defect >= tol.eq_tol:
        raise ValueError(f"relation defect {defect:.3e} too large for tangent computation")
    p = rep.genus
    d = rep.ctx.dim
    basis = _lie_basis(rep.ctx)
    basis_cols = np.array([b.reshape(-1) for b in basis]).T
    rows = [_relation_differential(rep)]
    keep = np.ones(2 * p * d, dtype=bool)
    for constraint in constraints:
        if isinstance(constraint, FixGenerator):
            if not 1 <= constraint.index <= 2 * p:
                raise ValueError(f"generator index {constraint.index} out of range")
            keep[(constraint.index - 1) * d : constraint.index * d] = False
        elif isinstance(constraint, FixCommutator):
            handle = constraint.handle
            if not 1 <= handle <= p:
                raise ValueError(f"handle {handle} out of range")
            if constraint.target is not None:
                actual = commutator(rep.images[handle - 1], rep.images[p + handle - 1])
                if not group_equal(actual, constraint.target, tol):
                    raise ValueError("representation does not satisfy the commutator target")
            block_a, block_b = _commutator_blocks(rep, handle)
            block = np.zeros((rep.ctx.n ** 2, 2 * p * d), dtype=complex)
            block[:, (handle - 1) * d : handle * d] = block_a @ basis_cols
            block[:, (p + handle - 1) * d : (p + handle) * d] = block_b @ basis_cols
            rows.append(block)
        else:
            raise TypeError(f"unknown constraint {constraint!r}")
    stacked = np.vstack(rows)[:, keep]
    return int(keep.sum()) - _numerical_rank(stacked, tol.rank_tol)


# ---------------------------------------------------------------------------
# Density heuristic and samplers.


def is_heuristically_dense(
    rep: Representation,
    tol: Tolerance = DEFAULT_TOL,
    max_order: int = 200,
) -> bool:
    """Heuristic Zariski-density check for the image subgroup.

    Requires irreducibility plus a fingerprint-word image of infinite order
    (an eigenvalue off the unit circle, or no finite order up to
    ``max_order``).  This is a documented heuristic, not a proof: density is
    a Zariski-open condition with no known certifying algorithm here.
    """
    if not is_irreducible(rep, tol):
        return False
    for w in fingerprint_words(rep.genus):
        if torsion_order(evaluate(rep, w), max_order, tol) is None:
            return True
    return False


def sample_representation(
    ctx: GroupContext,
    genus: int,
    seed: int,
    mode: str = "generic",
) -> Representation:
    """A random exact point of the relation variety.

    Handles are filled in swapped pairs ((x, y) on one handle, (y, x) on the
    next), whose commutators cancel exactly for any x, y; a leftover odd
    handle gets the commuting pair (z, z^-1).  This does not sample the
    whole variety but produces varied exact representations, irreducible for
    generic draws at genus >= 2.  ``mode`` picks the element sampler
    ('generic' or 'haar_unitary').
    """
    rng = np.random.default_rng(seed)
    images: list[GroupElement | None] = [None] * (2 * genus)

    def draw() -> GroupElement:
        return sample_element(ctx, mode, int(rng.integers(0, 2**32)))

    handle = 1
    while handle + 1 <= genus:
        x, y = draw(), draw()
        images[handle - 1], images[genus + handle - 1] = x, y
        images[handle], images[genus + handle] = y, x
        handle += 2
    if handle == genus:
        z = draw()
        images[handle - 1] = z
        images[genus + handle - 1] = z.inv()
    return Representation(ctx, genus, tuple(images))  # type: ignore[arg-type]


def sample_centralizer(
    g: GroupElement, seed: int = 0, tol: Tolerance = DEFAULT_TOL
) -> GroupElement:
    """A random invertible element commuting with g (det-normalized for SL)."""
    basis = _intertwiner_basis([g.mat], [g.mat], tol.rank_tol)
    rng = np.random.default_rng(seed)
    x = _invertible_from_nullspace(basis, g.ctx, rng)
    if x is None:
        raise RuntimeError("no invertible centralizer element found")
    return x
