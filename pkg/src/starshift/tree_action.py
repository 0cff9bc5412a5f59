"""The defining action on vertices of the rooted binary tree.

A vertex at height m is a bit string of length m (a plain '0'/'1'
string).  Generator `a` flips the first bit; each of b, c, d reads the
leading block of ones, v = 1^n 0 alpha x, and flips alpha unless n is
congruent to the generator's residue mod 3.  Strings too short to
contain the pattern (in particular all-ones strings) are fixed, which
is the unique extension compatible with the action on longer strings.

Word-sized computations (triviality tests, quadrant supports) go
through cached permutation tables on whole levels.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .core_words import GENERATORS, free_reduce
from .errors import NotLevelTwoTrivialError, SizeLimitError

# Residues controlling which levels each generator acts on.
V_RESIDUE = {"b": 2, "c": 1, "d": 0}

DEPTH_CAP = 20


def _check_bits(v: str) -> None:
    for ch in v:
        if ch not in "01":
            raise ValueError(f"invalid bit {ch!r}")


def act_generator(g: str, v: str) -> str:
    """Apply one generator to a bit string; the length is preserved."""
    _check_bits(v)
    if g == "a":
        return ("1" if v[0] == "0" else "0") + v[1:] if v else v
    if g not in V_RESIDUE:
        raise ValueError(f"unknown generator {g!r}")
    n = 0
    while n < len(v) and v[n] == "1":
        n += 1
    i = n + 1  # position of alpha in 1^n 0 alpha x
    if i >= len(v):
        return v
    if n % 3 == V_RESIDUE[g]:
        return v
    return v[:i] + ("1" if v[i] == "0" else "0") + v[i + 1 :]


def act_word(word: str, v: str) -> str:
    """Apply a group word right-to-left, the identity word acting trivially."""
    for g in reversed(word):
        v = act_generator(g, v)
    return v


@lru_cache(maxsize=None)
def level_permutation(g: str, m: int) -> np.ndarray:
    """Permutation of {0,1}^m induced by a generator.

    Vertices are encoded as integers with the first bit of the string as
    the most significant bit.
    """
    if g not in GENERATORS:
        raise ValueError(f"unknown generator {g!r}")
    if m < 0:
        raise ValueError("level must be non-negative")
    size = 1 << m
    perm = np.arange(size, dtype=np.int64)
    if m > 0 and g == "a":
        perm ^= 1 << (m - 1)
    elif m > 0:
        res = V_RESIDUE[g]
        for v in range(size):
            bits = format(v, f"0{m}b")
            n = len(bits) - len(bits.lstrip("1"))
            i = n + 1
            if i < m and n % 3 != res:
                perm[v] = v ^ (1 << (m - 1 - i))
    perm.setflags(write=False)  # cached and shared, keep callers honest
    return perm


def word_permutation(word: str, m: int) -> np.ndarray:
    """Permutation of {0,1}^m induced by a group word (right-to-left)."""
    perm = np.arange(1 << m, dtype=np.int64)
    for g in reversed(free_reduce(word)):
        perm = level_permutation(g, m)[perm]
    return perm


def is_trivial_up_to_depth(word: str, m: int, cap: int = DEPTH_CAP) -> bool:
    """Whether a group word fixes every vertex of level m.

    Fixing level m fixes all shallower levels too, so this is a
    semi-decision for triviality: a True answer is only a necessary
    condition, no depth is claimed sufficient.
    """
    if m < 1:
        raise ValueError("depth must be positive")
    if m > cap:
        raise SizeLimitError(f"depth {m} exceeds the cap {cap}")
    perm = word_permutation(word, m)
    return bool(np.array_equal(perm, np.arange(1 << m)))


def stabilizer_generators(v: str) -> set[str]:
    """The generators fixing a given vertex."""
    return {g for g in GENERATORS if act_generator(g, v) == v}


def quadrant_support(word: str, depth: int, cap: int = DEPTH_CAP) -> set[str]:
    """Two-bit prefixes below which the word moves some level-`depth` vertex.

    The word must fix the first two levels pointwise; the result is a
    depth-bounded approximation of its decomposition into the four
    rigid stabilizers of the second level.
    """
    if depth < 2:
        raise ValueError("depth must be at least 2")
    if depth > cap:
        raise SizeLimitError(f"depth {depth} exceeds the cap {cap}")
    if not np.array_equal(word_permutation(word, 2), np.arange(4)):
        raise NotLevelTwoTrivialError(
            f"word {word!r} does not fix the first two tree levels pointwise"
        )
    perm = word_permutation(word, depth)
    moved = np.nonzero(perm != np.arange(1 << depth))[0]
    return {format(int(v) >> (depth - 2), "02b") for v in moved}
