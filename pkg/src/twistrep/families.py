"""Constructors for every explicit twist-fixed family, plus the equation solvers.

Two closed-form matrix families recur throughout.  The Weyl-equation family
needs a Weyl representative w and Cartan elements g, h with

    w.(h g) = h        and        [g, w]^n = e,   g != e,

which forces the conjugator h = diag(t, 1/t) to satisfy t^2 = s^-1 when
g = diag(s, 1/s) and w is the standard 2x2 Weyl flip (the naive choice
t^2 = s only works when s^2 = 1; :func:`twist_conjugator_audit` checks both
conventions).  The mixed-twist family needs triples (g, h, k) with k
centralizing g and g = [k^-1, h^-1], which is the same square-root
constraint in disguise.

Commutator equations C(a, b) = target over the compact subgroup are solved
exactly for 2x2 contexts by a spectral construction, and by randomized
restarts of local descent in general; both existence statements being used
are nonconstructive, so the solvers carry residual certificates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import scipy.linalg
import scipy.optimize

from .groups import (
    DEFAULT_TOL,
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
from .reps import (
    Representation,
    is_heuristically_dense,
    is_irreducible,
    _intertwiner_basis,
    _invertible_from_nullspace,
)
from .twists import PseudoDegeneration
from .words import generator_curve, separating_curve

__all__ = [
    "SolverError",
    "WeylTriple",
    "CentralizerTriple",
    "torsion_anchored_family",
    "solve_weyl_triple",
    "weyl_twist_family",
    "solve_commutator",
    "solve_commutator_sl2c",
    "central_separating_family",
    "dense_separating_family",
    "mixed_twist_family",
    "complete_centralizer_triple",
    "twist_conjugator_audit",
    "embed_element",
    "embed_block",
    "weyl_flip",
    "diagonal_element",
]


class SolverError(RuntimeError):
    """A numerical solver ran out of restarts; carries the best residual seen."""

    def __init__(self, message: str, residual: float):
        super().__init__(f"{message} (best residual {residual:.3e})")
        self.residual = residual


def diagonal_element(ctx: GroupContext, entries) -> GroupElement:
    return GroupElement(ctx, np.diag(np.asarray(entries, dtype=complex)))


def weyl_flip(ctx: GroupContext) -> GroupElement:
    """The standard 2x2 Weyl representative [[0, 1], [-1, 0]]."""
    if ctx.n != 2:
        raise ValueError("weyl_flip is the 2x2 representative")
    return GroupElement(ctx, np.array([[0.0, 1.0], [-1.0, 0.0]], dtype=complex))


def embed_element(g: GroupElement, ambient: GroupContext) -> GroupElement:
    """Block embedding diag(g, 1) of a smaller matrix group into a larger one."""
    n = g.ctx.n
    if ambient.n < n:
        raise ValueError("ambient group is smaller than the block")
    m = np.eye(ambient.n, dtype=complex)
    m[:n, :n] = g.mat
    return GroupElement(ambient, m)


def embed_block(rep: Representation, ambient: GroupContext) -> Representation:
    return Representation(
        ambient, rep.genus, tuple(embed_element(g, ambient) for g in rep.images)
    )


# ---------------------------------------------------------------------------
# Weyl-equation triples.


@dataclass(frozen=True)
class WeylTriple:
    """(w, g, h) with w.(hg) = h and [g, w]^order_bound = e, g != e."""

    w: GroupElement
    g: GroupElement
    h: GroupElement
    order_bound: int

    def residuals(self, tol: Tolerance = DEFAULT_TOL) -> dict[str, float]:
        e = identity(self.g.ctx)
        return {
            "swap": element_distance(conjugate(self.w, self.h @ self.g), self.h),
            "power": element_distance(commutator(self.g, self.w).power(self.order_bound), e),
        }

    def validate(self, tol: Tolerance = DEFAULT_TOL) -> None:
        res = self.residuals(tol)
        if max(res.values()) >= tol.eq_tol:
            raise ValueError(f"Weyl-equation invariants violated: {res}")
        if group_equal(self.g, identity(self.g.ctx), tol):
            raise ValueError("g must be a nontrivial element")


@dataclass(frozen=True)
class CentralizerTriple:
    """(g, h, k) with k in the centralizer of g and g = [k^-1, h^-1]."""

    g: GroupElement
    h: GroupElement
    k: GroupElement

    def residuals(self, tol: Tolerance = DEFAULT_TOL) -> dict[str, float]:
        return {
            "centralizes": element_distance(conjugate(self.k, self.g), self.g),
            "commutator": element_distance(
                commutator(self.k.inv(), self.h.inv()), self.g
            ),
        }

    def validate(self, tol: Tolerance = DEFAULT_TOL) -> None:
        res = self.residuals(tol)
        if max(res.values()) >= tol.eq_tol:
            raise ValueError(f"centralizer-triple invariants violated: {res}")


def solve_weyl_triple(
    ctx: GroupContext, n: int, family: str = "sl2", seed: int = 0
) -> WeylTriple:
    """A Weyl-equation triple with power bound n.

    ``sl2``/``pgl2`` use the closed form g = diag(s, 1/s), w the Weyl flip,
    h = diag(t, 1/t) with t^2 = s^-1; s is a primitive n-th root of unity
    for SL(2) (s = -1 when n = 1, where only s^2 = 1 is available) and a
    primitive 2n-th root for PGL(2), which needs n >= 2 so that s != +-1
    keeps g projectively nontrivial.  ``general_diagonal`` solves the
    cyclic system h_{sigma(j)} = h_j g_j for a sampled permutation sigma in
    SL(m), with g built from n-th roots of unity summing to zero along every
    cycle.
    """
    if n < 1:
        raise ValueError("power bound n must be at least 1")
    if family == "sl2":
        if ctx.family != "SL" or ctx.n != 2:
            raise ValueError("family 'sl2' requires the SL(2) context")
        theta = math.pi if n == 1 else 2.0 * math.pi / n
    elif family == "pgl2":
        if not ctx.projective:
            raise ValueError("family 'pgl2' requires the PGL(2) context")
        if n < 2:
            raise ValueError("PGL(2) needs n >= 2: s with s^2 = 1 is projectively trivial")
        theta = math.pi / n
    elif family == "general_diagonal":
        return _general_diagonal_triple(ctx, n, seed)
    else:
        raise ValueError(f"unknown triple family {family!r}")
    s = np.exp(1j * theta)
    t = np.exp(-0.5j * theta)  # t^2 = 1/s
    triple = WeylTriple(
        w=weyl_flip(ctx),
        g=diagonal_element(ctx, [s, 1.0 / s]),
        h=diagonal_element(ctx, [t, 1.0 / t]),
        order_bound=n,
    )
    triple.validate()
    return triple


def _general_diagonal_triple(ctx: GroupContext, n: int, seed: int) -> WeylTriple:
    if ctx.family != "SL":
        raise ValueError("general_diagonal triples are implemented for SL(m)")
    if n < 2:
        raise ValueError("general_diagonal needs n >= 2")
    m = ctx.n
    rng = np.random.default_rng(seed)
    for _ in range(64):
        sigma = rng.permutation(m)
        if np.all(sigma == np.arange(m)):
            sigma[[0, 1]] = sigma[[1, 0]]
        # decompose into cycles; exponents of zeta sum to 0 mod n per cycle
        # so that the h-propagation closes up and det(g) = 1.
        exps = np.zeros(m, dtype=int)
        seen = np.zeros(m, dtype=bool)
        for start in range(m):
            if seen[start]:
                continue
            cycle = [start]
            seen[start] = True
            j = int(sigma[start])
            while j != start:
                cycle.append(j)
                seen[j] = True
                j = int(sigma[j])
            if len(cycle) >= 2:
                body = rng.integers(0, n, size=len(cycle) - 1)
                exps[cycle[:-1]] = body
                exps[cycle[-1]] = (-int(body.sum())) % n
        if not exps.any():
            continue
        zeta = np.exp(2j * math.pi / n)
        gdiag = zeta ** exps
        hdiag = np.ones(m, dtype=complex)
        seen[:] = False
        for start in range(m):
            if seen[start]:
                continue
            seen[start] = True
            j = start
            while True:
                nxt = int(sigma[j])
                seen[nxt] = True
                if nxt == start:
                    break
                hdiag[nxt] = hdiag[j] * gdiag[j]
                j = nxt
        hdiag = hdiag / np.prod(hdiag) ** (1.0 / m)
        w = np.zeros((m, m), dtype=complex)
        for j in range(m):
            w[int(sigma[j]), j] = 1.0
        if np.linalg.det(w).real < 0:
            w[int(sigma[0]), 0] = -1.0
        triple = WeylTriple(
            w=GroupElement(ctx, w),
            g=diagonal_element(ctx, gdiag),
            h=diagonal_element(ctx, hdiag),
            order_bound=n,
        )
        triple.validate()
        return triple
    raise SolverError("no nontrivial diagonal triple found", float("nan"))


def weyl_twist_family(
    triple: WeylTriple, genus: int, indices: tuple[int, ...]
) -> tuple[Representation, PseudoDegeneration]:
    """The simple-degeneration family built from a Weyl-equation triple.

    Places g at the chosen handle slots and w at their duals; every handle
    contributes [g, w] to the relation, which telescopes to [g, w]^n = e.
    The paired twist product is one positive twist along each chosen
    generator curve, and conjugation by h (or h^-1) returns the twisted
    tuple to the original one.
    """
    indices = tuple(sorted(set(int(i) for i in indices)))
    if len(indices) != triple.order_bound:
        raise ValueError(
            f"need exactly {triple.order_bound} handle indices, got {len(indices)}"
        )
    if not indices or indices[0] < 1 or indices[-1] > genus:
        raise ValueError("handle indices out of range")
    ctx = triple.g.ctx
    e = identity(ctx)
    images = [e] * (2 * genus)
    for i in indices:
        images[i - 1] = triple.g
        images[genus + i - 1] = triple.w
    rep = Representation(ctx, genus, tuple(images))
    tau = PseudoDegeneration(
        genus, tuple((generator_curve(i, genus), 1) for i in indices)
    )
    return rep, tau


# ---------------------------------------------------------------------------
# Torsion-anchored families (one generator pinned at a torsion element).


def torsion_anchored_family(
    ctx: GroupContext,
    genus: int,
    anchor: GroupElement,
    partner: GroupElement,
    max_order: int = 256,
    tol: Tolerance = DEFAULT_TOL,
) -> tuple[Representation, PseudoDegeneration]:
    """A representation pinned at a torsion element, fixed exactly by the
    n-th power twist along the first generator curve.

    At genus 1 the partner must centralize the anchor (the whole fiber over
    the anchor is its centralizer); at genus >= 2 the anchor/partner pair is
    repeated crosswise on the first two handles so the relation holds for
    any partner.
    """
    order = torsion_order(anchor, max_order, tol)
    if order is None:
        raise ValueError(f"anchor element has no finite order up to {max_order}")
    e = identity(ctx)
    if genus == 1:
        if not group_equal(commutator(anchor, partner), e, tol):
            raise ValueError("at genus 1 the partner must commute with the anchor")
        images = (anchor, partner)
    else:
        images = [e] * (2 * genus)
        images[0] = anchor
        images[genus + 1] = anchor
        images[1] = partner
        images[genus] = partner
        images = tuple(images)
    rep = Representation(ctx, genus, images)
    tau = PseudoDegeneration(genus, ((generator_curve(1, genus), order),))
    return rep, tau


# ---------------------------------------------------------------------------
# Commutator-equation solvers.


def _check_unitary(mat: np.ndarray, what: str) -> None:
    if np.linalg.norm(mat @ mat.conj().T - np.eye(mat.shape[0])) > 1e-6:
        raise ValueError(f"{what} must be unitary")


def _su2_spectral(target: np.ndarray, basis: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Exact (a, b) in SU(2) with [a, b] = target and b diagonal in ``basis``.

    Writes b = V diag(e^{i phi}, e^{-i phi}) V*; then [a, b] = target reduces
    to a (b) a^-1 = (target b), which is solvable by a unitary a exactly when
    target b has the same spectrum as b.  In the V-basis the trace matching
    condition pins e^{2 i phi} = (1 - conj(x)) / (x - 1) for x the (1,1)
    entry, which has unit modulus for any SU(2) matrix; a is then the
    eigenvector frame of target b.
    """
    v = basis
    tp = v.conj().T @ target @ v
    if np.linalg.norm(tp - np.eye(2)) < 1e-12:
        return np.eye(2, dtype=complex), np.eye(2, dtype=complex)
    x = tp[0, 0]
    phi = 0.5 * np.angle((1.0 - np.conj(x)) / (x - 1.0))
    b = np.diag([np.exp(1j * phi), np.exp(-1j * phi)]).astype(complex)
    m = tp @ b
    evals, evecs = np.linalg.eig(m)
    if abs(evals[0] - evals[1]) < 1e-9:
        raise SolverError("degenerate spectrum in spectral commutator solve", 1.0)
    i_plus = int(np.argmin(np.abs(evals - np.exp(1j * phi))))
    vp = evecs[:, i_plus] / np.linalg.norm(evecs[:, i_plus])
    vm = evecs[:, 1 - i_plus]
    vm = vm - vp * np.vdot(vp, vm)
    vm = vm / np.linalg.norm(vm)
    w = np.column_stack([vp, vm])
    w = w / np.sqrt(np.linalg.det(w))
    return v @ w @ v.conj().T, v @ b @ v.conj().T


def _hermitian_basis(n: int) -> list[np.ndarray]:
    """Real basis of traceless Hermitian n x n matrices (n^2 - 1 elements)."""
    basis = []
    for i in range(n):
        for j in range(i + 1, n):
            e = np.zeros((n, n), dtype=complex)
            e[i, j] = e[j, i] = 1.0
            basis.append(e)
            f = np.zeros((n, n), dtype=complex)
            f[i, j] = -1j
            f[j, i] = 1j
            basis.append(f)
    for i in range(n - 1):
        e = np.zeros((n, n), dtype=complex)
        e[i, i] = 1.0
        e[i + 1, i + 1] = -1.0
        basis.append(e)
    return basis


def _su_exp(theta: np.ndarray, basis: list[np.ndarray]) -> np.ndarray:
    h = sum(t * b for t, b in zip(theta, basis))
    evals, evecs = np.linalg.eigh(h)
    return (evecs * np.exp(1j * evals)) @ evecs.conj().T


def _optimize_commutator(
    target: np.ndarray,
    rng: np.random.Generator,
    torus_basis: np.ndarray | None,
    restarts: int,
    max_iters: int,
    residual_target: float,
) -> tuple[np.ndarray, np.ndarray, float]:
    """Randomized-restart local descent for [a, b] = target over SU(n).

    ``torus_basis``, when given, restricts b to the torus unitary-diagonal
    in those columns.  Returns the best (a, b, residual) found.
    """
    n = target.shape[0]
    herm = _hermitian_basis(n)
    d = len(herm)
    nb = n - 1 if torus_basis is not None else d

    def build(thetas: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        a = _su_exp(thetas[:d], herm)
        if torus_basis is not None:
            angles = np.append(thetas[d:], -np.sum(thetas[d:]))
            b = (torus_basis * np.exp(1j * angles)) @ torus_basis.conj().T
        else:
            b = _su_exp(thetas[d:], herm)
        return a, b

    def loss(thetas: np.ndarray) -> float:
        a, b = build(thetas)
        c = a @ b @ a.conj().T @ b.conj().T
        return float(np.linalg.norm(c - target) ** 2)

    best = (np.eye(n, dtype=complex), np.eye(n, dtype=complex), float("inf"))
    for _ in range(restarts):
        x0 = rng.normal(scale=1.0, size=d + nb)
        res = scipy.optimize.minimize(
            loss, x0, method="L-BFGS-B", options={"maxiter": max_iters, "ftol": 1e-16}
        )
        a, b = build(res.x)
        r = math.sqrt(max(res.fun, 0.0))
        if r < best[2]:
            best = (a, b, r)
        if best[2] < residual_target:
            break
    return best


def solve_commutator(
    ctx: GroupContext,
    target: GroupElement,
    constraint: GroupElement | None = None,
    seed: int = 0,
    tol: Tolerance = DEFAULT_TOL,
    method: str = "auto",
    restarts: int = 16,
    max_iters: int = 500,
) -> tuple[GroupElement, GroupElement]:
    """Solve [a, b] = target over the compact subgroup.

    With ``constraint`` set to a regular unitary element g, b is confined to
    the centralizer torus of g (diagonal phases in g's eigenbasis).  The 2x2
    contexts use the exact spectral construction unless ``method`` forces
    ``optimize``; larger contexts always use randomized-restart descent.
    Raises :class:`SolverError` when no candidate meets ``solver_tol``.
    """
    if target.ctx != ctx:
        raise ValueError("target context mismatch")
    n = ctx.n
    tmat = target.mat
    _check_unitary(tmat, "target")
    if ctx.projective:
        tmat = tmat / np.sqrt(np.linalg.det(tmat))
    elif abs(np.linalg.det(tmat) - 1.0) > 1e-6:
        raise ValueError("commutators have determinant 1; target must too")
    basis = np.eye(n, dtype=complex)
    if constraint is not None:
        if constraint.ctx != ctx:
            raise ValueError("constraint context mismatch")
        _check_unitary(constraint.mat, "constraint element")
        tri, z = scipy.linalg.schur(constraint.mat, output="complex")
        eigs = np.diag(tri)
        if np.min(np.abs(eigs[:, None] - eigs[None, :]) + np.eye(n)) < 1e-8:
            raise ValueError("constraint element must be regular (distinct eigenvalues)")
        basis = z
    rng = np.random.default_rng(seed)
    if n == 2 and method in ("auto", "spectral"):
        a, b = _su2_spectral(tmat, basis)
        residual = element_distance(
            commutator(GroupElement(ctx, a), GroupElement(ctx, b)), target
        )
        if residual < tol.solver_tol:
            return GroupElement(ctx, a), GroupElement(ctx, b)
        if method == "spectral":
            raise SolverError("spectral commutator solve failed", residual)
    torus = basis if constraint is not None else None
    a, b, residual = _optimize_commutator(
        tmat, rng, torus, restarts, max_iters, tol.solver_tol
    )
    if residual >= math.sqrt(tol.solver_tol):
        raise SolverError("commutator solver ran out of restarts", residual)
    return GroupElement(ctx, a), GroupElement(ctx, b)


def solve_commutator_sl2c(
    target: GroupElement,
    seed: int = 0,
    tol: Tolerance = DEFAULT_TOL,
    retries: int = 32,
) -> tuple[GroupElement, GroupElement]:
    """Solve [x, y] = target over all of SL(2, C) (not just the compact part).

    Uses the trace parametrization: for prescribed traces (alpha, beta) of x
    and y, the commutator trace is alpha^2 + beta^2 + gamma^2 - alpha beta
    gamma - 2 where gamma = tr(xy), so gamma solves a quadratic; a standard
    pair with those traces is then conjugated onto the target.  Central
    targets are handled explicitly.  Used by the perturb-and-repair search.
    """
    ctx = target.ctx
    if ctx.family != "SL" or ctx.n != 2:
        raise ValueError("solve_commutator_sl2c works in SL(2)")
    e = identity(ctx)
    if group_equal(target, e, tol):
        return e, e
    if element_distance(target, GroupElement(ctx, -np.eye(2, dtype=complex))) < tol.eq_tol:
        x = diagonal_element(ctx, [1j, -1j])
        return x, weyl_flip(ctx)
    rng = np.random.default_rng(seed)
    tau = np.trace(target.mat)
    best = float("inf")
    for _ in range(retries):
        alpha = rng.standard_normal() + 1j * rng.standard_normal()
        beta = rng.standard_normal() + 1j * rng.standard_normal()
        disc = np.sqrt((alpha * beta) ** 2 - 4.0 * (alpha**2 + beta**2 - 2.0 - tau))
        gamma = 0.5 * (alpha * beta + disc)
        zeta = 0.5 * (gamma + np.sqrt(gamma**2 - 4.0))
        if abs(zeta) < 1e-8:
            continue
        x = np.array([[alpha, -1.0], [1.0, 0.0]], dtype=complex)
        y = np.array([[0.0, zeta], [-1.0 / zeta, beta]], dtype=complex)
        c = x @ y @ np.linalg.inv(x) @ np.linalg.inv(y)
        space = _intertwiner_basis([c], [target.mat], tol.rank_tol)
        s = _invertible_from_nullspace(space, ctx, rng)
        if s is None:
            continue
        xe = conjugate(s, GroupElement(ctx, x))
        ye = conjugate(s, GroupElement(ctx, y))
        residual = element_distance(commutator(xe, ye), target)
        best = min(best, residual)
        if residual < tol.solver_tol:
            return xe, ye
    raise SolverError("SL(2,C) commutator solve failed", best)


# ---------------------------------------------------------------------------
# Separating-curve families.


def _central_scalar_order(lam: GroupElement, tol: Tolerance) -> int:
    """Validate lam as a nontrivial central torsion element; return its order."""
    n = lam.ctx.n
    omega = lam.mat[0, 0]
    if np.linalg.norm(lam.mat - omega * np.eye(n)) > tol.eq_tol:
        raise ValueError("element is not central (not a scalar matrix)")
    order = torsion_order(lam, 2 * n + 4, tol)
    if order is None or order == 1:
        raise ValueError("central element must be torsion and nontrivial")
    return order


def central_separating_family(
    sub_ctx: GroupContext,
    lam: GroupElement,
    genus: int,
    seed: int = 0,
    tol: Tolerance = DEFAULT_TOL,
    ambient: GroupContext | None = None,
) -> tuple[Representation, PseudoDegeneration]:
    """A representation whose first handle commutator is a nontrivial central
    element, fixed exactly by the first separating twist.

    The first two handles are solved so their commutators are lam and
    lam^-1; the rest are trivial.  The separating curve evaluates to lam,
    and conjugating the far handles by a central element does nothing, so
    the twist fixes the tuple elementwise under either side convention.
    Optionally block-embeds the result into a larger ambient group, where
    lam is no longer central but the fixedness survives verbatim.
    """
    if genus < 2:
        raise ValueError("separating families need genus >= 2")
    _central_scalar_order(lam, tol)
    a1, b1 = solve_commutator(sub_ctx, lam, seed=seed, tol=tol)
    a2, b2 = solve_commutator(sub_ctx, lam.inv(), seed=seed + 1, tol=tol)
    e = identity(sub_ctx)
    images = [e] * (2 * genus)
    images[0], images[genus] = a1, b1
    images[1], images[genus + 1] = a2, b2
    rep = Representation(sub_ctx, genus, tuple(images))
    if ambient is not None:
        rep = embed_block(rep, ambient)
    tau = PseudoDegeneration(genus, ((separating_curve(1, genus), 1),))
    return rep, tau


def dense_separating_family(
    sub_ctx: GroupContext,
    lam: GroupElement,
    genus: int,
    seed: int = 0,
    tol: Tolerance = DEFAULT_TOL,
    ambient: GroupContext | None = None,
    max_resamples: int = 64,
) -> tuple[Representation, PseudoDegeneration]:
    """Like :func:`central_separating_family` but with an irreducible image
    that passes the density heuristic.

    Handle 2 carries a Haar-random compact pair (g, h); handle 3 absorbs the
    surplus by solving for commutator value (lam [g, h])^-1, so the full
    relation telescopes to the identity.  Resamples the pair until the
    irreducibility and density checks pass.
    """
    if genus < 3:
        raise ValueError("dense separating families need genus >= 3")
    _central_scalar_order(lam, tol)
    e = identity(sub_ctx)
    for attempt in range(max_resamples):
        base = seed + 1000 * attempt
        g = sample_element(sub_ctx, "haar_unitary", base + 1)
        h = sample_element(sub_ctx, "haar_unitary", base + 2)
        a1, b1 = solve_commutator(sub_ctx, lam, seed=base + 3, tol=tol)
        surplus = GroupElement(
            sub_ctx, np.linalg.inv(lam.mat @ commutator(g, h).mat)
        )
        a3, b3 = solve_commutator(sub_ctx, surplus, seed=base + 4, tol=tol)
        images = [e] * (2 * genus)
        images[0], images[genus] = a1, b1
        images[1], images[genus + 1] = g, h
        images[2], images[genus + 2] = a3, b3
        rep = Representation(sub_ctx, genus, tuple(images))
        if is_irreducible(rep, tol) and is_heuristically_dense(rep, tol):
            if ambient is not None:
                rep = embed_block(rep, ambient)
            tau = PseudoDegeneration(genus, ((separating_curve(1, genus), 1),))
            return rep, tau
    raise SolverError("no irreducible dense sample found", float("nan"))


# ---------------------------------------------------------------------------
# The mixed-sign twist family (fixed classes of a non-realizable twist product).


def mixed_twist_family(
    ctx: GroupContext,
    genus: int,
    s: complex,
    filler: str = "identity",
    seed: int = 0,
) -> tuple[Representation, PseudoDegeneration, CentralizerTriple]:
    """The family fixed by one positive and one negative generator twist.

    Built over SL(2) from g = diag(s, 1/s), h the Weyl flip and the
    conjugator k = diag(t, 1/t) with t^2 = s^-1.  The paired twist product
    (one positive twist along the first curve, one negative along the dual
    of the second handle) sends both middle images to h g^-1, and k
    conjugates the result back.  The product is not realizable as a
    degeneration, and for s off the unit roots the pinned image g is not
    torsion, which is exactly what makes the family suggestive.

    ``filler`` fills handles 3..p with the identity or with (u, e) pairs
    sampled from the diagonal centralizer of k.
    """
    if ctx.family != "SL" or ctx.n != 2:
        raise ValueError("the mixed twist family lives in SL(2)")
    if genus < 2:
        raise ValueError("needs genus >= 2")
    s = complex(s)
    if s == 0:
        raise ValueError("s must be nonzero")
    t = np.exp(-0.5 * np.log(s))  # t^2 = 1/s
    g = diagonal_element(ctx, [s, 1.0 / s])
    h = weyl_flip(ctx)
    k = diagonal_element(ctx, [t, 1.0 / t])
    triple = CentralizerTriple(g=g, h=h, k=k)
    triple.validate()
    e = identity(ctx)
    images = [e] * (2 * genus)
    images[0] = g
    images[genus + 1] = g
    images[1] = h
    images[genus] = h
    rng = np.random.default_rng(seed)
    if filler == "centralizer_sample":
        for handle in range(3, genus + 1):
            u = np.exp(rng.normal(scale=0.5) + 1j * rng.uniform(0, 2 * math.pi))
            images[handle - 1] = diagonal_element(ctx, [u, 1.0 / u])
    elif filler != "identity":
        raise ValueError(f"unknown filler mode {filler!r}")
    rep = Representation(ctx, genus, tuple(images))
    tau = PseudoDegeneration(
        genus,
        (
            (generator_curve(1, genus), 1),
            (generator_curve(genus + 2, genus), -1),
        ),
    )
    return rep, tau, triple


def complete_centralizer_triple(
    g: GroupElement, seed: int = 0, tol: Tolerance = DEFAULT_TOL
) -> CentralizerTriple:
    """Extend a regular unitary g to a full centralizer triple (g, h, k).

    Solves [a, b] = g^-1 with b confined to g's centralizer torus (the
    inverted-argument form of the constrained commutator equation), then
    h = a^-1 and k = b^-1.
    """
    e = identity(g.ctx)
    if group_equal(g, e, tol):
        return CentralizerTriple(g=e, h=e, k=e)
    a, b = solve_commutator(g.ctx, g.inv(), constraint=g, seed=seed, tol=tol)
    triple = CentralizerTriple(g=g, h=a.inv(), k=b.inv())
    triple.validate()
    return triple


# ---------------------------------------------------------------------------
# Square-root convention audit.


def twist_conjugator_audit(family: str, n: int) -> dict:
    """Compare the two candidate conjugator normalizations t^2 = s^-1 and t^2 = s.

    For the standard 2x2 matrices, checks whether each choice of t satisfies
    (a) the Weyl-equation conjugation w.(hg) = h and (b) the centralizer-triple
    membership g = [k^-1, h^-1].  The two choices coincide exactly when
    s^2 = 1; for n >= 3 only the inverse convention survives.  The verify
    command prints this audit.
    """
    if family == "sl2":
        ctx = GroupContext("SL", 2)
        theta = math.pi if n == 1 else 2.0 * math.pi / n
    elif family == "pgl2":
        ctx = GroupContext("PGL", 2)
        if n < 2:
            raise ValueError("PGL(2) audit needs n >= 2")
        theta = math.pi / n
    else:
        raise ValueError(f"unknown family {family!r}")
    s = np.exp(1j * theta)
    g = diagonal_element(ctx, [s, 1.0 / s])
    w = weyl_flip(ctx)
    tol = DEFAULT_TOL
    out: dict = {"family": family, "n": n, "s": s, "s_squared_is_one": abs(s * s - 1.0) < 1e-12}
    for label, t in (("inverse", np.exp(-0.5j * theta)), ("direct", np.exp(0.5j * theta))):
        h = diagonal_element(ctx, [t, 1.0 / t])
        weyl_residual = element_distance(conjugate(w, h @ g), h)
        k = h
        mixed_residual = element_distance(commutator(k.inv(), w.inv()), g)
        out[label] = {
            "t": t,
            "weyl_ok": weyl_residual < tol.eq_tol,
            "weyl_residual": weyl_residual,
            "mixed_ok": mixed_residual < tol.eq_tol,
            "mixed_residual": mixed_residual,
        }
    return out
