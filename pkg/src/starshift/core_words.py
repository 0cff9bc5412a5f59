"""Alternating words over {a, B, C, D} and the language they generate.

The shift space studied by this package is generated by the palindromes

    w_1 = a,   w_{n+1} = w_n alpha w_n,

where the middle letter alpha cycles through D, C, B as n runs through
1, 2, 3, ... (mod 3).  Everything downstream (jump actions, windows, SFT
approximations) consults this module for word construction and for the
language oracle.

Words are plain strings.  Group words over the generators {a, b, c, d}
of the free product Z2 * Z2^2 are also plain strings, kept in freely
reduced form by :func:`free_reduce`.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import SizeLimitError

LETTERS = "aBCD"
GENERATORS = "abcd"

# Default cap on the index n of w_n; |w_24| is ~16M letters.
WORD_CAP = 24

_LETTER_RANK = {c: i for i, c in enumerate(LETTERS)}

# Products of distinct non-trivial elements of Z2^2.
_KLEIN_PRODUCT = {
    ("b", "c"): "d", ("c", "b"): "d",
    ("b", "d"): "c", ("d", "b"): "c",
    ("c", "d"): "b", ("d", "c"): "b",
}

# Letterwise substitution generating the same one-sided fixed point as
# the w_n words; on this alphabet it reads a -> aD, B -> aD, C -> aB,
# D -> aC.
_TAU = {"a": "aD", "B": "aD", "C": "aB", "D": "aC"}

_KAPPA = {"a": "aca", "b": "d", "c": "b", "d": "c"}


def _check_letters(word: str) -> None:
    for ch in word:
        if ch not in _LETTER_RANK:
            raise ValueError(f"invalid letter {ch!r}; expected one of {LETTERS}")


def _check_generators(word: str) -> None:
    for ch in word:
        if ch not in GENERATORS:
            raise ValueError(f"invalid generator {ch!r}; expected one of {GENERATORS}")


def lex_key(word: str) -> tuple[int, ...]:
    """Sort key realizing the letter order a < B < C < D."""
    return tuple(_LETTER_RANK[c] for c in word)


def alpha_choice(n: int) -> str:
    """Middle letter inserted between two copies of w_n to form w_{n+1}."""
    if n < 1:
        raise ValueError("n must be positive")
    return "BDC"[n % 3]


@lru_cache(maxsize=None)
def _build_w(n: int) -> str:
    if n == 1:
        return "a"
    prev = _build_w(n - 1)
    return prev + alpha_choice(n - 1) + prev


def build_w(n: int, cap: int = WORD_CAP) -> str:
    """The n-th generator word w_n, of length 2^n - 1.

    Raises SizeLimitError beyond the cap; pass a larger ``cap`` to
    override (the words grow exponentially, fail loudly rather than
    truncate).
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > cap:
        raise SizeLimitError(f"w_{n} exceeds the cap n <= {cap}")
    return _build_w(n)


def is_alternating(word: str) -> bool:
    """True iff in every adjacent pair exactly one letter is `a`."""
    _check_letters(word)
    return all((x == "a") != (y == "a") for x, y in zip(word, word[1:]))


def is_cyclically_alternating(word: str) -> bool:
    """Alternation including the pair (last letter, first letter)."""
    if not is_alternating(word):
        return False
    if len(word) >= 2:
        return (word[-1] == "a") != (word[0] == "a")
    # a single letter is cyclically adjacent to itself
    return len(word) == 0


def reverse(word: str) -> str:
    """Reverse a letter sequence (alternation is preserved)."""
    _check_letters(word)
    return word[::-1]


def free_reduce(word: str) -> str:
    """Freely reduced form of a group word over {a, b, c, d}.

    Cancels squares of all four generators and multiplies adjacent
    letters inside Z2^2 (bc -> d and so on).  Idempotent and never
    length-increasing.
    """
    _check_generators(word)
    out: list[str] = []
    for g in word:
        cur: str | None = g
        while cur is not None and out:
            top = out[-1]
            if top == cur:
                out.pop()
                cur = None
            elif top != "a" and cur != "a":
                out.pop()
                cur = _KLEIN_PRODUCT[top, cur]
            else:
                break
        if cur is not None:
            out.append(cur)
    return "".join(out)


def kappa(word: str) -> str:
    """Substitution a -> aca, b -> d, c -> b, d -> c, then free reduction."""
    _check_generators(word)
    return free_reduce("".join(_KAPPA[g] for g in word))


def kappa_iter(word: str, k: int) -> str:
    """k-fold application of :func:`kappa`, reducing after each step."""
    if k < 0:
        raise ValueError("k must be non-negative")
    out = free_reduce(word)
    for _ in range(k):
        out = kappa(out)
    return out


def tau_fixed_point_prefix(length: int, cap: int = WORD_CAP) -> str:
    """First ``length`` letters of the substitution fixed point from `a`.

    Agrees with the corresponding prefix of every sufficiently long w_n.
    """
    if length < 0:
        raise ValueError("length must be non-negative")
    if length > 2**cap - 1:
        raise SizeLimitError(f"prefix length {length} exceeds cap 2^{cap}-1")
    word = "a"
    while len(word) < length:
        word = "".join(_TAU[c] for c in word)
    return word[:length]


def _adequate_n(length: int, cap: int) -> int:
    # smallest n >= 1 with length <= 2^n - 1
    n = 1
    while 2**n - 1 < length:
        n += 1
    if n + 3 > cap:
        raise SizeLimitError(
            f"language query of length {length} needs w_{n + 3}, beyond cap {cap}"
        )
    return n


@lru_cache(maxsize=8192)
def language_contains(word: str, cap: int = WORD_CAP) -> bool:
    """Whether ``word`` occurs in the shift space generated by the w_n.

    Every language word of length <= 2^n - 1 already occurs inside
    w_{n+3}, so membership reduces to one substring search.  Cached:
    windows re-validate the same long content many times over.
    """
    _check_letters(word)
    if not is_alternating(word):
        return False
    n = _adequate_n(len(word), cap)
    return word in build_w(n + 3, cap)


def language_words(length: int, cap: int = WORD_CAP) -> list[str]:
    """All language words of the given length, sorted with a < B < C < D."""
    if length < 0:
        raise ValueError("length must be non-negative")
    n = _adequate_n(length, cap)
    host = build_w(n + 3, cap)
    found = {host[i : i + length] for i in range(len(host) - length + 1)}
    return sorted(found, key=lex_key)
