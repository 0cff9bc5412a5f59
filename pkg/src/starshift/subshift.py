"""One-dimensional subshifts of finite type over small alphabets.

An SFT is stored by its admissible blocks of one fixed length (the
order); the follower automaton has the (order-1)-blocks as states and
the order-blocks as edges.  After trimming states without incoming or
outgoing edges, bi-infinite paths through the automaton are exactly the
configurations, so language queries and periodic-point searches reduce
to path enumeration.

Alphabet symbols are single characters and words are strings, matching
the rest of the package.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from itertools import product

from . import core_words
from .core_words import build_w, language_contains, language_words
from .errors import DisjointnessError, EmptySftError, SizeLimitError
from .jump_action import CircularWord, relation_set, relator_fixes_all_starrings

APPROXIMATION_CAP = 256
PERIOD_CAP = 64
_ENUM_CAP = 1 << 22  # largest alphabet**order we are willing to enumerate

BLANK = "_"


@dataclass(frozen=True, eq=False)
class ZSft:
    """Subshift of finite type, given by its admissible order-blocks."""

    alphabet: tuple[str, ...]
    order: int
    blocks: frozenset[str]
    given_forbidden: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("order must be positive")
        for sym in self.alphabet:
            if len(sym) != 1:
                raise ValueError(f"alphabet symbols must be single characters: {sym!r}")
        letters = set(self.alphabet)
        for w in self.blocks:
            if len(w) != self.order or not set(w) <= letters:
                raise ValueError(f"bad admissible block {w!r}")

    @classmethod
    def from_forbidden(
        cls, alphabet: tuple[str, ...] | str, forbidden: list[str] | tuple[str, ...]
    ) -> "ZSft":
        """SFT avoiding the given words (lengths may be mixed)."""
        alphabet = tuple(alphabet)
        bad = tuple(sorted(set(forbidden)))
        for w in bad:
            if not w:
                raise ValueError("cannot forbid the empty word")
        order = max((len(w) for w in bad), default=1)
        if len(alphabet) ** order > _ENUM_CAP:
            raise SizeLimitError(
                f"enumerating blocks of length {order} over {len(alphabet)} symbols"
                " is too large; construct from admissible blocks instead"
            )
        blocks = frozenset(
            "".join(u)
            for u in product(alphabet, repeat=order)
            if not any(b in "".join(u) for b in bad)
        )
        return cls(alphabet, order, blocks, given_forbidden=bad)

    @classmethod
    def from_blocks(
        cls, alphabet: tuple[str, ...] | str, order: int, blocks
    ) -> "ZSft":
        return cls(tuple(alphabet), order, frozenset(blocks))

    @cached_property
    def _automaton(self) -> dict[str, dict[str, str]]:
        trans: dict[str, dict[str, str]] = {}
        for w in self.blocks:
            trans.setdefault(w[:-1], {})[w[-1]] = w[1:]
            trans.setdefault(w[1:], {})
        # keep only states on bi-infinite paths
        while True:
            with_in = {t for edges in trans.values() for t in edges.values()}
            dead = [
                s for s, edges in trans.items() if not edges or s not in with_in
            ]
            if not dead:
                return trans
            for s in dead:
                del trans[s]
            for edges in trans.values():
                for c in [c for c, t in edges.items() if t not in trans]:
                    del edges[c]

    @property
    def is_empty(self) -> bool:
        return not self._automaton

    @property
    def forbidden(self) -> tuple[str, ...]:
        """Forbidden words: as given, else the complement of the blocks."""
        if self.given_forbidden is not None:
            return self.given_forbidden
        if len(self.alphabet) ** self.order > _ENUM_CAP:
            raise SizeLimitError("complementing the block set is too large")
        return tuple(
            sorted(
                "".join(u)
                for u in product(self.alphabet, repeat=self.order)
                if "".join(u) not in self.blocks
            )
        )

    def _key(self, word: str):
        rank = {c: i for i, c in enumerate(self.alphabet)}
        return tuple(rank[c] for c in word)

    def words(self, length: int) -> set[str]:
        """Words of the given length appearing in some configuration."""
        if length < 0:
            raise ValueError("length must be non-negative")
        trans = self._automaton
        if not trans:
            return set()
        m = self.order - 1
        if length <= m:
            return {s[i : i + length] for s in trans for i in range(m - length + 1)}
        frontier = {s: {s} for s in trans}  # suffix state -> words read so far
        out: dict[str, set[str]] = frontier
        for _ in range(length - m):
            nxt: dict[str, set[str]] = {}
            for state, words in out.items():
                for c, t in trans[state].items():
                    nxt.setdefault(t, set()).update(w + c for w in words)
            out = nxt
        return set().union(*out.values()) if out else set()

    def to_json(self) -> str:
        payload = {"alphabet": list(self.alphabet), "forbidden": list(self.forbidden)}
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "ZSft":
        payload = json.loads(text)
        return cls.from_forbidden(tuple(payload["alphabet"]), payload["forbidden"])


def sft_approximation(order: int, cap: int = APPROXIMATION_CAP) -> ZSft:
    """The SFT whose forbidden words are the non-language words of one length.

    For large orders the forbidden set is astronomical, so the SFT is
    built from the admissible side; ``forbidden`` stays available for
    small orders.
    """
    if order < 1:
        raise ValueError("order must be positive")
    if order > cap:
        raise SizeLimitError(f"approximation order {order} exceeds the cap {cap}")
    return ZSft.from_blocks("aBCD", order, language_words(order))


def canonical_rotation(word: str, alphabet: tuple[str, ...] | str) -> str:
    """Lexicographically least rotation under the alphabet's order."""
    rank = {c: i for i, c in enumerate(alphabet)}
    rotations = [word[i:] + word[:i] for i in range(len(word))]
    return min(rotations, key=lambda w: tuple(rank[c] for c in w))


def periodic_points(sft: ZSft, p: int, cap: int = PERIOD_CAP) -> list[str]:
    """All period-p orbits, as canonical rotations of their repeating word.

    A period-p point is a closed length-p path in the follower
    automaton; the list is sorted in the alphabet's order and empty when
    no such point exists.
    """
    if p < 1:
        raise ValueError("p must be positive")
    if p > cap:
        raise SizeLimitError(f"period {p} exceeds the cap {cap}")
    trans = sft._automaton
    found: set[str] = set()
    for start in trans:
        stack = [(start, "")]
        while stack:
            state, word = stack.pop()
            if len(word) == p:
                if state == start:
                    found.add(canonical_rotation(word, sft.alphabet))
                continue
            for c, t in trans[state].items():
                stack.append((t, word + c))
    return sorted(found, key=sft._key)


def periodic_points_jsonl(sft: ZSft, periods) -> str:
    """Periodic-point report, one JSON object per period per line."""
    lines = []
    for p in periods:
        words = periodic_points(sft, p)
        lines.append(
            json.dumps(
                {"period": p, "count": len(words), "words": words}, sort_keys=True
            )
        )
    return "\n".join(lines) + "\n"


def languages_equal(x1: ZSft, x2: ZSft, up_to: int) -> bool:
    """Whether the two subshifts have the same words at every length <= up_to."""
    if tuple(x1.alphabet) != tuple(x2.alphabet):
        raise ValueError("languages are only compared over a shared alphabet")
    return all(x1.words(n) == x2.words(n) for n in range(up_to + 1))


def union_sft(x1: ZSft, x2: ZSft) -> ZSft:
    """SFT whose configurations are exactly those of the two inputs.

    Grows a window length m until the two languages share no m-word (the
    inputs must be disjoint subshifts), then forbids the m-words
    appearing in neither and the (m+1)-words whose prefix and suffix
    belong to different inputs.  Equivalently: an (m+1)-block is
    admissible iff both of its m-subwords come from the same input.
    """
    if tuple(x1.alphabet) != tuple(x2.alphabet):
        raise ValueError("union requires a shared alphabet")
    lo = max(x1.order, x2.order)
    hi = lo + len(x1._automaton) * len(x2._automaton) + 1
    m = lo
    while True:
        w1, w2 = x1.words(m), x2.words(m)
        shared = w1 & w2
        if not shared:
            break
        if m >= hi:
            witness = sorted(shared, key=x1._key)[0]
            raise DisjointnessError(
                f"subshifts share arbitrarily long words, e.g. {witness!r}",
                witness=witness,
            )
        m += 1
    blocks = set()
    for words in (w1, w2):
        for w in words:
            for c in x1.alphabet:
                if (w + c)[1:] in words:
                    blocks.add(w + c)
    return ZSft.from_blocks(x1.alphabet, m + 1, blocks)


@dataclass(frozen=True)
class WangTile:
    """A one-letter tile with colors facing the two generator directions."""

    name: str
    left: str
    right: str

    def __post_init__(self):
        if len(self.name) != 1 or self.name == BLANK:
            raise ValueError(f"tile names are single characters other than {BLANK!r}")


def comb_sft(tiles: list[WangTile] | tuple[WangTile, ...], k: int) -> ZSft:
    """Spread a tile SFT living on the subgroup of index k over all of Z.

    Symbols are the tiles plus a blank.  Three rules: tiles at distance
    k match colors; within distance < k of a tile everything is blank;
    and every length-k window contains a tile.  Valid configurations
    carry the tile system on a single residue class mod k (the phase)
    and blanks elsewhere.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    tiles = tuple(tiles)
    names = [t.name for t in tiles]
    if len(set(names)) != len(names):
        raise ValueError("tile names must be distinct")
    # the tile system itself must admit a bi-infinite row
    succ = {
        t.name: [u.name for u in tiles if t.right == u.left] for t in tiles
    }
    alive = set(succ)
    while True:
        with_in = {v for t in alive for v in succ[t] if v in alive}
        dead = [t for t in alive if t not in with_in or not set(succ[t]) & alive]
        if not dead:
            break
        alive -= set(dead)
    if not alive:
        raise EmptySftError("the tile set admits no bi-infinite matching row")

    alphabet = tuple(names) + (BLANK,)
    if len(alphabet) ** (k + 1) > _ENUM_CAP:
        raise SizeLimitError("comb construction too large to enumerate")
    by_name = {t.name: t for t in tiles}
    forbidden = {BLANK * k}
    for r in range(1, k):
        for mid in product(alphabet, repeat=r - 1):
            for t1 in names:
                for t2 in names:
                    forbidden.add(t1 + "".join(mid) + t2)
    for t in names:
        for mid in product(alphabet, repeat=k - 1):
            for last in alphabet:
                ok = last != BLANK and by_name[t].right == by_name[last].left
                if not ok:
                    forbidden.add(t + "".join(mid) + last)
    return ZSft.from_forbidden(alphabet, sorted(forbidden))


PSEUDO_ORBIT_CAP = 8


@dataclass(frozen=True)
class PseudoOrbitReport:
    """Outcome of the three checks on the periodic pseudo-point (w_n alpha)^Z."""

    n: int
    alpha: str
    period: int
    window_length: int
    in_approximation: bool  # all words of length 2^n of the repetition are language words
    action_well_defined: bool  # the relator family fixes every circular starring
    outside_language: bool  # every window with both margins 2^{n+1} fails
    minimal_failing_length: int
    failing_word: str

    @property
    def all_passed(self) -> bool:
        return self.in_approximation and self.action_well_defined and self.outside_language

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "alpha": self.alpha,
            "period": self.period,
            "window_length": self.window_length,
            "checks": {
                "in_approximation": self.in_approximation,
                "action_well_defined": self.action_well_defined,
                "outside_language": self.outside_language,
            },
            "minimal_failing_length": self.minimal_failing_length,
            "failing_word": self.failing_word,
            "all_passed": self.all_passed,
        }


def pseudo_orbit_demo(
    n: int, word_len: int | None = None, t: int = 6, cap: int = PSEUDO_ORBIT_CAP
) -> PseudoOrbitReport:
    """Checks making the repetition of w_n alpha a traceable-by-nothing orbit.

    (i) every word of length 2^n of the repetition is in the language
    (so the point survives the order-2^n approximation, every such word
    already occurring in w_{n+1}); (ii) the relator family of
    :func:`relation_set` fixes all starrings of the circular word, so
    the group acts on its orbit; (iii) yet no excerpt with both margins
    2^{n+1} around the origin is a language word, so the point is not in
    the shift space.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > cap:
        raise SizeLimitError(f"pseudo-orbit index {n} exceeds the cap {cap}")
    period = 2**n
    if word_len is None:
        word_len = 4 * period
    alpha = core_words.alpha_choice(n)
    ring = build_w(n) + alpha
    rep = ring * (word_len // period + 2)

    host = build_w(n + 1)
    check_i = all(
        language_contains(rep[s : s + period]) and rep[s : s + period] in host
        for s in range(period)
    )

    check_ii = all(
        relator_fixes_all_starrings(r, CircularWord(ring)) for r in relation_set(t)
    )

    check_iii = all(
        not language_contains(rep[s : s + word_len]) for s in range(period)
    )

    minimal_len, witness = 0, ""
    for length in range(1, word_len + 1):
        bad = [
            rep[s : s + length]
            for s in range(period)
            if not language_contains(rep[s : s + length])
        ]
        if bad:
            minimal_len, witness = length, sorted(bad, key=core_words.lex_key)[0]
            break

    return PseudoOrbitReport(
        n=n,
        alpha=alpha,
        period=period,
        window_length=word_len,
        in_approximation=check_i,
        action_well_defined=check_ii,
        outside_language=check_iii,
        minimal_failing_length=minimal_len,
        failing_word=witness,
    )
