"""Dehn twist actions on representations and their fixed-class certificates.

The twists act only along the registry curves, through closed-form updates
of the generator images; the surface relation is preserved exactly (up to
roundoff).  A pseudo-degeneration is an ordered product of such twists along
pairwise disjoint curves with nonzero integer exponents; it arises from an
actual degeneration exactly when every exponent is positive, and is called
simple when every exponent is 1.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .groups import (
    DEFAULT_TOL,
    GroupElement,
    Tolerance,
    conjugate,
    group_equal,
    identity,
    torsion_order,
)
from .reps import ConjugacyWitness, Representation, conjugacy_witness, evaluate
from .words import CurveId, curve_word, curves_disjoint

__all__ = [
    "PseudoDegeneration",
    "ExceptionalityReport",
    "ConjectureReport",
    "apply_twist",
    "apply_pseudo_degeneration",
    "is_realizable_as_degeneration",
    "is_simple_degeneration",
    "fixed_class_witness",
    "exceptional_certificate",
    "conjecture_check",
]

_SIDES = ("C", "C_inverse")


@dataclass(frozen=True)
class PseudoDegeneration:
    """An ordered product of twists (curve, exponent) along disjoint curves.

    ``side`` fixes which of the two separating-twist conjugation conventions
    is used (conjugate by the curve value or by its inverse); generator-curve
    twists ignore it.
    """

    genus: int
    factors: tuple[tuple[CurveId, int], ...]
    side: str = "C"

    def __post_init__(self) -> None:
        factors = tuple((c, int(e)) for c, e in self.factors)
        if self.side not in _SIDES:
            raise ValueError(f"side must be one of {_SIDES}")
        for curve, exponent in factors:
            if curve.genus != self.genus:
                raise ValueError(f"curve {curve} does not live at genus {self.genus}")
            if exponent == 0:
                raise ValueError("twist exponents must be nonzero")
        for i in range(len(factors)):
            for j in range(i + 1, len(factors)):
                if not curves_disjoint(factors[i][0], factors[j][0]):
                    raise ValueError(
                        f"curves {factors[i][0]} and {factors[j][0]} are not disjoint"
                    )
        object.__setattr__(self, "factors", factors)

    def curves(self) -> list[CurveId]:
        return [c for c, _ in self.factors]


def apply_twist(
    rep: Representation,
    curve: CurveId,
    exponent: int,
    side: str = "C",
) -> Representation:
    """One twist power along a registry curve.

    Generator curve A_i (i <= p) only changes the dual image:
    rho(A_{p+i}) -> rho(A_{p+i}) rho(A_i)^-exponent; the curve A_{p+i}
    changes rho(A_i) -> rho(A_i) rho(A_{p+i})^exponent.  The separating
    curve k conjugates every image of handles k+1..p by the evaluated curve
    value raised to +-exponent according to ``side``.
    """
    if curve.genus != rep.genus:
        raise ValueError(f"curve {curve} does not live at genus {rep.genus}")
    if exponent == 0:
        raise ValueError("twist exponent must be nonzero")
    if side not in _SIDES:
        raise ValueError(f"side must be one of {_SIDES}")
    p = rep.genus
    images = list(rep.images)
    if curve.kind == "Gen":
        i = curve.index
        if i <= p:
            images[p + i - 1] = images[p + i - 1] @ images[i - 1].power(-exponent)
        else:
            j = i - p
            images[j - 1] = images[j - 1] @ images[i - 1].power(exponent)
    else:
        k = curve.index
        power = exponent if side == "C" else -exponent
        b = evaluate(rep, curve_word(curve)).power(power)
        for handle in range(k + 1, p + 1):
            for slot in (handle - 1, p + handle - 1):
                images[slot] = conjugate(b, images[slot])
    return Representation(rep.ctx, rep.genus, tuple(images))


def apply_pseudo_degeneration(rep: Representation, tau: PseudoDegeneration) -> Representation:
    """Apply the factors left to right; disjointness makes the result order-independent."""
    if tau.genus != rep.genus:
        raise ValueError("genus mismatch")
    for curve, exponent in tau.factors:
        rep = apply_twist(rep, curve, exponent, tau.side)
    return rep


def is_realizable_as_degeneration(tau: PseudoDegeneration) -> bool:
    """Whether the twist product arises from an actual degeneration: all exponents positive."""
    return all(e > 0 for _, e in tau.factors)


def is_simple_degeneration(tau: PseudoDegeneration) -> bool:
    """Realizable with every exponent equal to 1."""
    return all(e == 1 for _, e in tau.factors)


def fixed_class_witness(
    rep: Representation,
    tau: PseudoDegeneration,
    tol: Tolerance = DEFAULT_TOL,
    seed: int = 0,
) -> ConjugacyWitness | None:
    """Conjugator taking the twisted representation back to the original.

    Success certifies that the conjugacy class of ``rep`` is fixed by the
    pseudo-degeneration.
    """
    return conjugacy_witness(apply_pseudo_degeneration(rep, tau), rep, tol, seed)


@dataclass(frozen=True)
class ExceptionalityReport:
    """Certificate that a fixed class is (or is not) pulled back from a degeneration.

    ``nontrivial_curve_values`` lists (curve, value, torsion order or None)
    for the factor curves whose image is not the identity.  ``verdict``:

    - ``exceptional``: fixed, realizable, and some pinched curve maps to a
      non-identity element, so the class cannot come from the central fibre;
    - ``pseudo_only``: fixed with a nontrivial curve value, but the twist
      product has a negative exponent and is not a degeneration;
    - ``in_image_possible``: fixed with all curve values trivial, so the
      obstruction is silent;
    - ``not_fixed``: the class is not fixed at all.
    """

    fixed: bool
    witness: ConjugacyWitness | None
    realizable: bool
    nontrivial_curve_values: tuple[tuple[CurveId, GroupElement, int | None], ...]
    verdict: str


def _curve_values(
    rep: Representation,
    tau: PseudoDegeneration,
    max_order: int,
    tol: Tolerance,
) -> list[tuple[CurveId, GroupElement, int | None, bool]]:
    out = []
    for curve in tau.curves():
        value = evaluate(rep, curve_word(curve))
        trivial = group_equal(value, identity(rep.ctx), tol)
        order = 1 if trivial else torsion_order(value, max_order, tol)
        out.append((curve, value, order, trivial))
    return out


def exceptional_certificate(
    rep: Representation,
    tau: PseudoDegeneration,
    tol: Tolerance = DEFAULT_TOL,
    max_order: int = 200,
    seed: int = 0,
) -> ExceptionalityReport:
    """Full fixedness / realizability / pinched-value certificate for (rep, tau)."""
    witness = fixed_class_witness(rep, tau, tol, seed)
    fixed = witness is not None
    realizable = is_realizable_as_degeneration(tau)
    values = _curve_values(rep, tau, max_order, tol)
    nontrivial = tuple((c, v, o) for c, v, o, trivial in values if not trivial)
    if not fixed:
        verdict = "not_fixed"
    elif not nontrivial:
        verdict = "in_image_possible"
    elif realizable:
        verdict = "exceptional"
    else:
        verdict = "pseudo_only"
    return ExceptionalityReport(fixed, witness, realizable, nontrivial, verdict)


@dataclass(frozen=True)
class ConjectureReport:
    """Torsion test of the pinched-curve values of a fixed class.

    ``status`` is ``consistent`` when every factor-curve value has finite
    order within the bound, ``violation_candidate`` when some value resists
    (which the torsion conjecture predicts never happens for a realizable
    twist product), or ``precondition_failed`` when the input is not a fixed
    class of a realizable product (a pseudo-degeneration hit is not a
    counterexample).
    """

    status: str
    detail: str
    curve_orders: tuple[tuple[CurveId, int | None], ...]


def conjecture_check(
    rep: Representation,
    tau: PseudoDegeneration,
    max_order: int = 200,
    tol: Tolerance = DEFAULT_TOL,
    seed: int = 0,
) -> ConjectureReport:
    """Check that a fixed class of a realizable twist product pinches to torsion."""
    if not is_realizable_as_degeneration(tau):
        return ConjectureReport(
            "precondition_failed",
            "twist product has a negative exponent; not a degeneration",
            (),
        )
    witness = fixed_class_witness(rep, tau, tol, seed)
    if witness is None:
        return ConjectureReport(
            "precondition_failed",
            "representation class is not fixed by the twist product",
            (),
        )
    values = _curve_values(rep, tau, max_order, tol)
    orders = tuple((c, o) for c, v, o, _ in values)
    if any(o is None for _, o in orders):
        return ConjectureReport(
            "violation_candidate",
            "a pinched curve value has no finite order within the bound",
            orders,
        )
    return ConjectureReport("consistent", "all pinched curve values are torsion", orders)
