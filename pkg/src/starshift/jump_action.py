"""The jump action of Z2 * Z2^2 on starred alternating words.

A starred word carries a single movable star between letters.  Each
generator jumps the star across an adjacent letter from its jump set:

    a over a,   b over C or D,   c over B or D,   d over B or C.

On alternating words at most one neighbor qualifies, so the rule is a
well-defined involution for each generator.  The same rule read
cyclically acts on circular words; relator checks over whole families
of starrings are done with composed permutation tables.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import core_words
from .core_words import (
    GENERATORS,
    build_w,
    is_alternating,
    is_cyclically_alternating,
    kappa,
)
from .errors import SizeLimitError

JUMP_SETS = {"a": "a", "b": "CD", "c": "BD", "d": "BC"}

STAR = "*"

ORBIT_CAP = 16
TABLE_CAPS = (8, 64, 8)  # n_max, p_max, t


@dataclass(frozen=True)
class StarredWord:
    """An alternating word with a star at position ``star`` in [0, len]."""

    word: str
    star: int

    def __post_init__(self):
        if not is_alternating(self.word):
            raise ValueError(f"{self.word!r} is not alternating")
        if not 0 <= self.star <= len(self.word):
            raise ValueError(f"star {self.star} out of range for {self.word!r}")

    def __str__(self) -> str:
        return self.word[: self.star] + STAR + self.word[self.star :]


def parse_starred(text: str) -> StarredWord:
    """Inverse of ``str``: read a starred word like ``aDa*CaDa``."""
    if text.count(STAR) != 1:
        raise ValueError(f"expected exactly one {STAR!r} in {text!r}")
    star = text.index(STAR)
    return StarredWord(text.replace(STAR, ""), star)


@dataclass(frozen=True)
class CircularWord:
    """A nonempty word read cyclically; alternation wraps around the end."""

    letters: str

    def __post_init__(self):
        if not self.letters:
            raise ValueError("circular word must be nonempty")
        if not is_cyclically_alternating(self.letters):
            raise ValueError(f"{self.letters!r} is not cyclically alternating")

    def __len__(self) -> int:
        return len(self.letters)


@dataclass(frozen=True)
class CircularStarredWord:
    """A circular word with a star; positions live modulo the length."""

    word: CircularWord
    star: int

    def __post_init__(self):
        object.__setattr__(self, "star", self.star % len(self.word))

    def __str__(self) -> str:
        s = self.word.letters
        return s[: self.star] + STAR + s[self.star :]


def circular_repetition(base: str, power: int) -> CircularWord:
    """The circular word (base)^power, e.g. (w_n alpha)^p for table rows."""
    if power < 1:
        raise ValueError("power must be positive")
    return CircularWord(base * power)


def jump_generator(g: str, s: StarredWord) -> StarredWord:
    """One generator acting on a starred word."""
    jumps = JUMP_SETS[g]
    w, j = s.word, s.star
    if j < len(w) and w[j] in jumps:
        return StarredWord(w, j + 1)
    if j > 0 and w[j - 1] in jumps:
        return StarredWord(w, j - 1)
    return s


def jump_word(word: str, s: StarredWord) -> StarredWord:
    """A group word acting right-to-left."""
    for g in reversed(word):
        s = jump_generator(g, s)
    return s


def jump_circular(g: str, s: CircularStarredWord) -> CircularStarredWord:
    """One generator acting on a circular starred word."""
    jumps = JUMP_SETS[g]
    w = s.word.letters
    n = len(w)
    if w[s.star] in jumps:
        return CircularStarredWord(s.word, (s.star + 1) % n)
    if w[s.star - 1] in jumps:
        return CircularStarredWord(s.word, (s.star - 1) % n)
    return s


def jump_circular_word(word: str, s: CircularStarredWord) -> CircularStarredWord:
    for g in reversed(word):
        s = jump_circular(g, s)
    return s


def linear_jump_permutation(letters: str, g: str) -> np.ndarray:
    """Permutation of star positions [0, len] under one generator."""
    jumps = JUMP_SETS[g]
    n = len(letters)
    perm = np.arange(n + 1, dtype=np.int64)
    for j in range(n + 1):
        if j < n and letters[j] in jumps:
            perm[j] = j + 1
        elif j > 0 and letters[j - 1] in jumps:
            perm[j] = j - 1
    return perm


def circular_jump_permutation(letters: str, g: str) -> np.ndarray:
    """Permutation of star positions [0, len) under one generator, cyclic."""
    jumps = JUMP_SETS[g]
    n = len(letters)
    perm = np.arange(n, dtype=np.int64)
    for j in range(n):
        if letters[j] in jumps:
            perm[j] = (j + 1) % n
        elif letters[j - 1] in jumps:
            perm[j] = (j - 1) % n
    return perm


def word_star_permutation(word: str, gen_perms: dict[str, np.ndarray]) -> np.ndarray:
    """Compose generator permutations along a group word, right-to-left."""
    size = len(next(iter(gen_perms.values())))
    perm = np.arange(size, dtype=np.int64)
    for g in reversed(word):
        perm = gen_perms[g][perm]
    return perm


@lru_cache(maxsize=None)
def relation_set(t: int) -> tuple[str, ...]:
    """Relators a^2, b^2, c^2, d^2, bcd and the kappa-iterates of
    (ad)^4 and (adacac)^4 up to exponent t, all fully expanded."""
    if t < 0:
        raise ValueError("t must be non-negative")
    relators = ["aa", "bb", "cc", "dd", "bcd"]
    short, long_ = "adadadad", "adacac" * 4
    for k in range(t + 1):
        relators.append(short)
        relators.append(long_)
        short, long_ = kappa(short), kappa(long_)
    return tuple(relators)


def _fixes_all(relators: tuple[str, ...], gen_perms: dict[str, np.ndarray]) -> bool:
    size = len(next(iter(gen_perms.values())))
    identity = np.arange(size, dtype=np.int64)
    return all(
        np.array_equal(word_star_permutation(r, gen_perms), identity)
        for r in relators
    )


def relator_fixes_all_starrings(relator: str, base: str | CircularWord) -> bool:
    """True iff the relator fixes every starring of the base word.

    Linear bases have len+1 starrings, circular ones len starrings.
    """
    if isinstance(base, CircularWord):
        perms = {g: circular_jump_permutation(base.letters, g) for g in GENERATORS}
    else:
        if not is_alternating(base):
            raise ValueError(f"{base!r} is not alternating")
        perms = {g: linear_jump_permutation(base, g) for g in GENERATORS}
    return _fixes_all((relator,), perms)


def table1(n_max: int = 6, p_max: int = 50, t: int = 6) -> list[list[bool]]:
    """Relator survival table for the circular words (w_n alpha)^p.

    Entry [n-1][p-1] is True iff every relator of :func:`relation_set`
    fixes all starrings of the circular repetition.
    """
    caps = TABLE_CAPS
    if not (1 <= n_max <= caps[0] and 1 <= p_max <= caps[1] and 0 <= t <= caps[2]):
        raise SizeLimitError(
            f"table1 caps are n_max<={caps[0]}, p_max<={caps[1]}, t<={caps[2]}"
        )
    relators = relation_set(t)
    rows = []
    for n in range(1, n_max + 1):
        base = build_w(n) + core_words.alpha_choice(n)
        row = []
        for p in range(1, p_max + 1):
            letters = base * p
            perms = {g: circular_jump_permutation(letters, g) for g in GENERATORS}
            row.append(_fixes_all(relators, perms))
        rows.append(row)
    return rows


def orbit_of_starrings(word: str) -> list[StarredWord]:
    """Breadth-first orbit of the position-0 starring of a generator word.

    Only the words w_n are accepted; the closure then consists of all
    2^n starrings, listed in deterministic BFS order (generator order
    a < b < c < d, FIFO queue).
    """
    n = len(word).bit_length()
    if n < 1 or n > ORBIT_CAP or word != build_w(n):
        raise ValueError("orbit base must be one of the words w_n, n <= %d" % ORBIT_CAP)
    start = StarredWord(word, 0)
    seen = {start}
    order = [start]
    queue = deque([start])
    while queue:
        s = queue.popleft()
        for g in GENERATORS:
            nxt = jump_generator(g, s)
            if nxt not in seen:
                seen.add(nxt)
                order.append(nxt)
                queue.append(nxt)
    return order
