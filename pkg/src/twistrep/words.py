"""Words in the standard genus-p surface group presentation.

The group has generators A_1 ... A_2p, where A_i and A_{p+i} are the dual
loop pair of handle i (meeting once), subject to the single relation
prod_{i=1..p} [A_i, A_{p+i}] = e.  Words are stored as freely reduced
sequences of signed generator indices: letter +i means A_i, letter -i means
A_i^-1.

The module also carries the fixed registry of named simple closed curves
the twist machinery acts along: the 2p deformed generator loops and the
p-1 standard separating curves (curve k bounds the subsurface holding
handles 1..k).  Their pairwise intersection data is hard-coded from the
standard picture of the genus-p surface.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "Word",
    "CurveId",
    "reduce",
    "surface_relation",
    "generator_curve",
    "separating_curve",
    "registry_curves",
    "curve_word",
    "curves_disjoint",
]


def _check_letters(letters: Iterable[int], genus: int) -> tuple[int, ...]:
    if genus < 1:
        raise ValueError("genus must be at least 1")
    letters = tuple(int(x) for x in letters)
    bound = 2 * genus
    for x in letters:
        if x == 0 or abs(x) > bound:
            raise ValueError(f"letter {x} out of range for genus {genus} (|letter| in 1..{bound})")
    return letters


@dataclass(frozen=True)
class Word:
    """A freely reduced word; construct via :func:`reduce` or operators."""

    genus: int
    letters: tuple[int, ...]

    def __post_init__(self) -> None:
        letters = _check_letters(self.letters, self.genus)
        for a, b in zip(letters, letters[1:]):
            if a == -b:
                raise ValueError("word is not freely reduced; use reduce()")
        object.__setattr__(self, "letters", letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        if self.genus != other.genus:
            raise ValueError("genus mismatch")
        return reduce(self.letters + other.letters, self.genus)

    def inverse(self) -> "Word":
        return Word(self.genus, tuple(-x for x in reversed(self.letters)))

    def exponent_sums(self) -> list[int]:
        """Total exponent per generator; zero everywhere iff null-homologous."""
        sums = [0] * (2 * self.genus)
        for x in self.letters:
            sums[abs(x) - 1] += 1 if x > 0 else -1
        return sums


def reduce(letters: Sequence[int], genus: int) -> Word:
    """Freely reduce a letter sequence into a Word."""
    letters = _check_letters(letters, genus)
    stack: list[int] = []
    for x in letters:
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return Word(genus, tuple(stack))


def empty_word(genus: int) -> Word:
    return Word(genus, ())


def _commutator_block(i: int, genus: int) -> tuple[int, ...]:
    # [A_i, A_{p+i}] as letters
    return (i, genus + i, -i, -(genus + i))


def surface_relation(genus: int) -> Word:
    """The defining relation prod_{i=1..p} A_i A_{p+i} A_i^-1 A_{p+i}^-1."""
    letters: tuple[int, ...] = ()
    for i in range(1, genus + 1):
        letters += _commutator_block(i, genus)
    return reduce(letters, genus)


@dataclass(frozen=True)
class CurveId:
    """A curve in the closed registry: kind 'Gen' (index 1..2p) or 'Sep' (index 1..p-1)."""

    kind: str
    index: int
    genus: int

    def __post_init__(self) -> None:
        if self.genus < 1:
            raise ValueError("genus must be at least 1")
        if self.kind == "Gen":
            if not 1 <= self.index <= 2 * self.genus:
                raise ValueError(f"generator curve index {self.index} out of range")
        elif self.kind == "Sep":
            if not 1 <= self.index <= self.genus - 1:
                raise ValueError(f"separating curve index {self.index} out of range")
        else:
            raise ValueError(f"unknown curve kind {self.kind!r}")

    def __repr__(self) -> str:
        return f"{self.kind}({self.index})@p{self.genus}"


def generator_curve(i: int, genus: int) -> CurveId:
    return CurveId("Gen", i, genus)


def separating_curve(k: int, genus: int) -> CurveId:
    return CurveId("Sep", k, genus)


def registry_curves(genus: int) -> list[CurveId]:
    gens = [generator_curve(i, genus) for i in range(1, 2 * genus + 1)]
    seps = [separating_curve(k, genus) for k in range(1, genus)]
    return gens + seps


def curve_word(curve: CurveId) -> Word:
    """The free-group word the curve represents.

    A generator curve is the one-letter word A_i.  Separating curve k is the
    partial relation prod_{i=1..k} [A_i, A_{p+i}], which bounds the first k
    handles.
    """
    if curve.kind == "Gen":
        return Word(curve.genus, (curve.index,))
    letters: tuple[int, ...] = ()
    for i in range(1, curve.index + 1):
        letters += _commutator_block(i, curve.genus)
    return reduce(letters, curve.genus)


def curves_disjoint(a: CurveId, b: CurveId) -> bool:
    """Whether two registry curves can be realized disjointly.

    A curve is never disjoint from itself.  The only intersecting registry
    pair is a dual generator pair {A_i, A_{p+i}}, which meets once; every
    separating curve can be pushed off everything else in the registry.
    """
    if a.genus != b.genus:
        raise ValueError("genus mismatch")
    if a == b:
        return False
    if a.kind == "Gen" and b.kind == "Gen":
        lo, hi = sorted((a.index, b.index))
        if hi - lo == a.genus:
            return False
    return True
