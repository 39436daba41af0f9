"""JSON wire formats for the domain objects.

Matrices are row-major nested lists of [real, imaginary] pairs:

    element:        {"ctx": {"family": "SL", "n": 2}, "mat": [[[re, im], ...], ...]}
    word:           {"genus": 2, "letters": [1, 3, -1, -3]}
    curve:          {"kind": "Gen", "i": 1} or {"kind": "Sep", "k": 1}
    representation: {"ctx": ..., "genus": 2, "images": [mat, ...]}
    twist product:  {"genus": 2, "factors": [{"curve": ..., "exp": 1}, ...], "side": "C"}

The representation loader re-checks the surface relation and reports the
defect; tuples that do not satisfy it are rejected.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .groups import DEFAULT_TOL, GroupContext, GroupElement, Tolerance
from .reps import Representation, relation_defect
from .twists import PseudoDegeneration
from .words import CurveId, Word, reduce as reduce_word

__all__ = [
    "ctx_to_dict",
    "ctx_from_dict",
    "matrix_to_list",
    "matrix_from_list",
    "element_to_dict",
    "element_from_dict",
    "word_to_dict",
    "word_from_dict",
    "curve_to_dict",
    "curve_from_dict",
    "representation_to_dict",
    "representation_from_dict",
    "pseudo_degeneration_to_dict",
    "pseudo_degeneration_from_dict",
    "dump_json",
    "load_json",
]


def ctx_to_dict(ctx: GroupContext) -> dict:
    return {"family": ctx.family, "n": ctx.n}


def ctx_from_dict(d: dict) -> GroupContext:
    return GroupContext(str(d["family"]), int(d["n"]))


def matrix_to_list(mat: np.ndarray) -> list:
    return [[[float(z.real), float(z.imag)] for z in row] for row in np.asarray(mat, dtype=complex)]


def matrix_from_list(data) -> np.ndarray:
    return np.array([[complex(re, im) for re, im in row] for row in data], dtype=complex)


def element_to_dict(g: GroupElement) -> dict:
    return {"ctx": ctx_to_dict(g.ctx), "mat": matrix_to_list(g.mat)}


def element_from_dict(d: dict) -> GroupElement:
    return GroupElement(ctx_from_dict(d["ctx"]), matrix_from_list(d["mat"]))


def word_to_dict(w: Word) -> dict:
    return {"genus": w.genus, "letters": list(w.letters)}


def word_from_dict(d: dict) -> Word:
    return reduce_word([int(x) for x in d["letters"]], int(d["genus"]))


def curve_to_dict(c: CurveId) -> dict:
    key = "i" if c.kind == "Gen" else "k"
    return {"kind": c.kind, key: c.index, "genus": c.genus}


def curve_from_dict(d: dict, genus: int | None = None) -> CurveId:
    kind = str(d["kind"])
    index = int(d["i"] if kind == "Gen" else d["k"])
    g = int(d.get("genus", genus if genus is not None else 0))
    return CurveId(kind, index, g)


def representation_to_dict(rep: Representation) -> dict:
    return {
        "ctx": ctx_to_dict(rep.ctx),
        "genus": rep.genus,
        "images": [matrix_to_list(g.mat) for g in rep.images],
    }


def representation_from_dict(
    d: dict, tol: Tolerance = DEFAULT_TOL
) -> tuple[Representation, float]:
    """Load a representation, enforce the relation invariant, report the defect."""
    ctx = ctx_from_dict(d["ctx"])
    genus = int(d["genus"])
    images = tuple(GroupElement(ctx, matrix_from_list(m)) for m in d["images"])
    rep = Representation(ctx, genus, images)
    defect = relation_defect(rep)
    if defect >= tol.eq_tol:
        raise ValueError(f"surface relation violated: defect {defect:.3e} >= {tol.eq_tol:.1e}")
    return rep, defect


def pseudo_degeneration_to_dict(tau: PseudoDegeneration) -> dict:
    return {
        "genus": tau.genus,
        "factors": [{"curve": curve_to_dict(c), "exp": e} for c, e in tau.factors],
        "side": tau.side,
    }


def pseudo_degeneration_from_dict(d: dict) -> PseudoDegeneration:
    genus = int(d["genus"])
    factors = tuple(
        (curve_from_dict(f["curve"], genus), int(f["exp"])) for f in d["factors"]
    )
    return PseudoDegeneration(genus, factors, str(d.get("side", "C")))


def dump_json(obj: dict, path: str | Path) -> None:
    Path(path).write_text(json.dumps(obj, sort_keys=True, indent=1) + "\n")


def load_json(path: str | Path) -> dict:
    return json.loads(Path(path).read_text())
