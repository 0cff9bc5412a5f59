"""Windows of the shift space and the topological-full-group mechanics.

A :class:`Window` is a finite excerpt of a bi-infinite configuration:
letters, a marked origin sitting between two letters, and an explicit
margin recording how far the excerpt is still guaranteed to be valid.
Generators act by moving the origin like the star of the jump action;
every move burns one unit of margin, and operations never fabricate
letters beyond the window.

Origin-motion convention: "origin moves right" is the positive
direction.  Under the dictionary to shift notation sigma(x)_i = x_{i+1}
a move right of the origin is one application of sigma, i.e. the
letters slide one step to the left past the marked point.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Sequence

from .core_words import LETTERS, free_reduce, language_contains, lex_key
from .errors import ClosureError, MarginExhaustedError, ReconstructionError
from .jump_action import (
    JUMP_SETS,
    CircularStarredWord,
    StarredWord,
    jump_circular,
    jump_generator,
)

# Letter at the origin -> generator realizing one step of the shift.
SHIFT_GENERATOR = {"a": "a", "B": "c", "C": "d", "D": "b"}

# Which of b, c, d fixes a point with the given letter next to the origin.
_MATCHING_GENERATOR = {"B": "b", "C": "c", "D": "d"}
_MATCHING_LETTER = {g: c for c, g in _MATCHING_GENERATOR.items()}

# Alphabetically first generator that jumps across the given letter.
_MOVER = {"a": "a", "B": "c", "C": "b", "D": "b"}


@dataclass(frozen=True)
class Window:
    """A language word with an origin and a validity margin.

    ``origin`` counts the letters strictly to the left of the marked
    point, so the letter "at" the origin is ``letters[origin]`` and the
    one before it is ``letters[origin - 1]``.  ``margin`` never exceeds
    the distance from the origin to either end.
    """

    letters: str
    origin: int
    margin: int = -1  # -1 requests the maximal margin

    def __post_init__(self):
        if not 0 <= self.origin <= len(self.letters):
            raise ValueError(f"origin {self.origin} out of range")
        limit = min(self.origin, len(self.letters) - self.origin)
        if self.margin == -1:
            object.__setattr__(self, "margin", limit)
        if not 0 <= self.margin <= limit:
            raise ValueError(f"margin {self.margin} exceeds the window bounds")
        if not language_contains(self.letters):
            raise ValueError("window content is not a language word")

    def _shifted(self, delta: int) -> "Window":
        # internal: letters were already validated, skip re-checking
        w = object.__new__(Window)
        object.__setattr__(w, "letters", self.letters)
        object.__setattr__(w, "origin", self.origin + delta)
        object.__setattr__(w, "margin", self.margin - (1 if delta else 0))
        return w

    def __str__(self) -> str:
        return self.letters[: self.origin] + "|" + self.letters[self.origin :]


def reverse_window(x: Window) -> Window:
    """Mirror a window; the letter at position p moves to -1-p."""
    return Window(x.letters[::-1], len(x.letters) - x.origin, x.margin)


@dataclass(frozen=True)
class CocyclePiece:
    """One clopen piece of a cocycle: constraints on the two letters
    adjacent to the origin, and the origin displacement on that piece."""

    left: frozenset[str] | None  # None = unconstrained
    right: frozenset[str] | None
    shift: int


@lru_cache(maxsize=None)
def generator_cocycle(g: str) -> tuple[CocyclePiece, ...]:
    """The three-piece cocycle of a generator.

    The +1 piece is the letter cylinder U_g at the origin, the -1 piece
    is its shift, and the rest is fixed; U_g and its shift are disjoint
    on alternating words, as required for these swap-style elements.
    """
    jumps = frozenset(JUMP_SETS[g])
    rest = frozenset(LETTERS) - jumps
    return (
        CocyclePiece(left=None, right=jumps, shift=+1),
        CocyclePiece(left=jumps, right=rest, shift=-1),
        CocyclePiece(left=rest, right=rest, shift=0),
    )


def evaluate_cocycle(pieces: Sequence[CocyclePiece], left: str, right: str) -> int:
    hits = [
        p.shift
        for p in pieces
        if (p.left is None or left in p.left) and (p.right is None or right in p.right)
    ]
    if len(hits) != 1:
        raise ValueError(f"cocycle pieces do not partition ({left!r}, {right!r})")
    return hits[0]


def apply_generator(g: str, x: Window) -> Window:
    """Move the origin of a window by one generator's jump rule."""
    if x.margin < 1:
        raise MarginExhaustedError(
            f"margin {x.margin} too small to apply a generator"
        )
    shift = evaluate_cocycle(
        generator_cocycle(g), x.letters[x.origin - 1], x.letters[x.origin]
    )
    return x._shifted(shift)


def apply_word(word: str, x: Window) -> Window:
    """Apply a group word right-to-left; margin is spent per move."""
    for g in reversed(word):
        x = apply_generator(g, x)
    return x


def shift_as_tfg(x: Window) -> Window:
    """One step of the shift, realized inside the full group.

    The four letter cylinders at the origin are disjoint, and on each
    the chosen generator jumps right, so the origin always advances by
    exactly one.
    """
    if x.margin < 1:
        raise MarginExhaustedError(f"margin {x.margin} too small to shift")
    out = apply_generator(SHIFT_GENERATOR[x.letters[x.origin]], x)
    if out.origin != x.origin + 1:
        raise AssertionError("shift piece failed to advance the origin")
    return out


def window_stabilizer_oracle(x: Window) -> Callable[[str], bool]:
    """Oracle answering whether a group word fixes the window's point.

    A jump element fixes the point iff the origin returns to its start;
    queries walking outside the margin raise MarginExhaustedError.
    """

    def oracle(word: str) -> bool:
        return apply_word(word, x).origin == x.origin

    return oracle


def reconstruct_from_stabilizer(oracle: Callable[[str], bool], budget: int) -> str:
    """Recover letters right of the origin of a hidden point, up to
    global reversal, using only stabilizer queries.

    Exactly one of b, c, d fixes any point (the one matching the non-`a`
    letter adjacent to the origin), which reveals that letter; the
    reading then restarts on the shifted point, whose stabilizer is the
    conjugate of the known one.  Which side of the origin carries the
    non-`a` letter is invisible to the oracle, hence the global
    reversal ambiguity.
    """
    if budget < 0:
        raise ValueError("budget must be non-negative")
    letters: list[str] = []
    conj = ""  # current point = conj applied to the hidden point

    def fixes(test: str) -> bool:
        return oracle(free_reduce(conj[::-1] + test + conj))

    while len(letters) < budget:
        fixers = [g for g in "bcd" if fixes(g)]
        if len(fixers) != 1:
            raise ReconstructionError(
                f"expected exactly one of b, c, d to fix, got {fixers!r}"
            )
        letter = _MATCHING_LETTER[fixers[0]]
        letters.append(letter)
        if len(letters) == budget:
            break
        letters.append("a")
        # cross the letter just read, then the forced `a` after it
        conj = "a" + _MOVER[letter] + conj
    return "".join(letters)


def vorobets_key(x: Window) -> Window:
    """Canonical representative of {window, mirrored window}.

    Picks the lexicographically smaller letter sequence under the order
    a < B < C < D, breaking ties by the smaller origin; idempotent by
    construction.
    """
    r = reverse_window(x)
    return min(x, r, key=lambda w: (lex_key(w.letters), w.origin))


@dataclass(frozen=True)
class SchreierGraph:
    """Orbit graph: one vertex per starred word, edges labeled by the
    generator moving one to the other, the basepoint marked."""

    vertices: tuple[str, ...]
    marked: str
    edges: tuple[tuple[str, str, str], ...]  # (source, label, target)

    def to_dot(self) -> str:
        lines = ["graph schreier {"]
        for v in self.vertices:
            attrs = ' [peripheries=2]' if v == self.marked else ""
            lines.append(f'  "{v}"{attrs};')
        for src, label, dst in self.edges:
            lines.append(f'  "{src}" -- "{dst}" [label="{label}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        payload = {
            "vertices": list(self.vertices),
            "marked": self.marked,
            "edges": [list(e) for e in self.edges],
        }
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def schreier_graph(
    vertices: Iterable[StarredWord] | Iterable[CircularStarredWord],
) -> SchreierGraph:
    """Build the labeled orbit graph of a generator-closed vertex set.

    Parallel edges with identical labels are merged; self-loops are
    kept, since they record stabilizer generators.  The first vertex is
    the marked basepoint.
    """
    listed = list(vertices)
    if not listed:
        raise ValueError("vertex set must be nonempty")
    step = jump_circular if isinstance(listed[0], CircularStarredWord) else jump_generator
    index = {str(v): i for i, v in enumerate(listed)}
    names = [str(v) for v in listed]
    edges = set()
    for v in listed:
        for g in "abcd":
            w = step(g, v)
            if str(w) not in index:
                raise ClosureError(
                    f"vertex set is not generator-closed: missing {str(w)!r}"
                )
            i, j = index[str(v)], index[str(w)]
            a, b = (i, j) if i <= j else (j, i)
            edges.add((a, b, g))
    ordered = sorted(edges)
    return SchreierGraph(
        vertices=tuple(names),
        marked=names[0],
        edges=tuple((names[a], g, names[b]) for a, b, g in ordered),
    )
