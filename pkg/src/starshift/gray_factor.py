"""The Gray-code conjugacy and the factor map onto the tree boundary.

Star positions of the word w_n correspond to level-n tree vertices
through a reflected-Gray-code-like table phi_n: position 0 maps to 1^n,
position 2^n - 1 to 1^{n-1}0, and the second half of phi_{n+1} replays
phi_n backwards with a 0 appended, mirroring the palindrome structure
of w_{n+1} = w_n alpha w_n.

On windows, the factor map is computed through the unique decomposition
of the content into "natural" w_n blocks separated by single letters:
locate the block at the origin, read off its star position, and take
the leading bits of its Gray code.  Whenever the window is too short to
pin the decomposition down, the operations raise MarginExhaustedError
rather than guess.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .core_words import alpha_choice, build_w
from .errors import InternalError, MarginExhaustedError, SizeLimitError
from .full_group import Window

GRAY_CAP = 20
FIBER_CAP = 16


@dataclass(frozen=True, eq=False)
class GrayTable:
    """Bijection from star positions [0, 2^n - 1] to n-bit strings.

    ``codes[j]`` holds the integer whose n-bit big-endian expansion is
    the vertex assigned to star position j.
    """

    n: int
    codes: np.ndarray = field(repr=False)

    def __len__(self) -> int:
        return len(self.codes)

    def bits(self, j: int) -> str:
        if not 0 <= j < len(self.codes):
            raise ValueError(f"star position {j} out of range")
        return format(int(self.codes[j]), f"0{self.n}b")

    def as_strings(self) -> list[str]:
        return [self.bits(j) for j in range(len(self.codes))]


@lru_cache(maxsize=None)
def _phi_codes(n: int) -> np.ndarray:
    if n == 1:
        codes = np.array([1, 0], dtype=np.int64)
    else:
        prev = _phi_codes(n - 1)
        # first half appends 1, second half replays the table backwards
        # and appends 0
        codes = np.concatenate([prev * 2 + 1, (prev * 2)[::-1]])
    codes.setflags(write=False)
    return codes


def phi(n: int, cap: int = GRAY_CAP) -> GrayTable:
    """The conjugacy table for star positions of w_n."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > cap:
        raise SizeLimitError(f"gray table for n={n} exceeds the cap {cap}")
    return GrayTable(n=n, codes=_phi_codes(n))


def flip(n: int, j: int) -> int:
    """Reflect a star position around the middle of w_{n+1}; an involution."""
    if not 0 <= j <= 2**n - 1:
        raise ValueError(f"position {j} out of range for n={n}")
    return 2**n - 1 - j


def natural_decomposition(x: Window, n: int) -> list[int]:
    """Start offsets of the natural w_n blocks fully visible in a window.

    The infinite point containing the window decomposes uniquely into
    w_n blocks separated by single letters; within the window the
    decomposition is recovered level by level.  Going from level m to
    m+1 the blocks pair up with one of two phases, and the visible
    separator letters decide which: pairs internal to a w_{m+1} show the
    letter alpha_choice(m), while the complementary separators are of
    strictly higher level and eventually differ from it.  If both
    phases are consistent with the visible letters the window cannot
    decide, and MarginExhaustedError is raised.
    """
    if n < 1:
        raise ValueError("n must be positive")
    letters = x.letters
    offsets = [i for i, ch in enumerate(letters) if ch == "a"]
    for level in range(1, n):
        block = 2**level - 1
        sep = alpha_choice(level)
        consistent = []
        for parity in (0, 1):
            good = all(
                letters[o + block] == sep
                for o in offsets[parity::2]
                if o + block < len(letters)
            )
            if good:
                consistent.append(parity)
        if len(consistent) != 1:
            if len(consistent) == 2:
                raise MarginExhaustedError(
                    f"window too small to identify the natural w_{level + 1} blocks"
                )
            raise InternalError("no phase fits a language window")
        nxt = 2 ** (level + 1) - 1
        offsets = [
            o for o in offsets[consistent[0] :: 2] if o + nxt <= len(letters)
        ]
    if not offsets:
        raise MarginExhaustedError(f"no full w_{n} block visible in the window")
    if any(b - a != 2**n for a, b in zip(offsets, offsets[1:])):
        raise InternalError("block offsets do not form the expected progression")
    return offsets


def psi(k: int, x: Window) -> str:
    """First k coordinates of the tree vertex underneath a window.

    Locates the natural w_{k+1} block at the origin (the unique one
    whose span [i, i + 2^{k+1} - 2] satisfies i <= 0 and ends at -1 or
    later, the origin sitting just left of position 0) and returns the
    first k bits of its Gray code.  A margin of 2^{k+2} letters on each
    side of the origin always suffices; smaller windows may raise
    MarginExhaustedError.
    """
    if k < 1:
        raise ValueError("k must be positive")
    span = 2 ** (k + 1) - 1
    offsets = natural_decomposition(x, k + 1)
    central = [
        o for o in offsets if o - x.origin <= 0 and (o - x.origin) + span - 1 >= -1
    ]
    if not central:
        raise MarginExhaustedError(
            f"the w_{k + 1} block at the origin is not fully inside the window"
        )
    if len(central) > 1:
        raise InternalError("more than one central block")
    position = x.origin - central[0]
    return phi(k + 1).bits(position)[:k]


def six_fiber_witnesses(m: int, cap: int = FIBER_CAP) -> list[Window]:
    """The six windows sharing a tree vertex to all visible depths.

    For each middle letter alpha in {B, C, D} the word w_m alpha w_m is
    a language word; the origin is placed after the first w_m, and the
    mirrored window is the same word with the origin after alpha.  All
    six agree on psi(k, .) for every k <= m - 2.
    """
    if m < 1:
        raise ValueError("m must be positive")
    if m > cap:
        raise SizeLimitError(f"fiber witnesses for m={m} exceed the cap {cap}")
    w = build_w(m)
    windows = []
    for alpha in "BCD":
        letters = w + alpha + w
        windows.append(Window(letters, len(w)))
        windows.append(Window(letters, len(w) + 1))
    return windows
