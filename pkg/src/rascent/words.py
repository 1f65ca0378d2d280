"""Words over the positive integers and their ascent statistics.

A word x = x_1 x_2 ... x_n (every entry at least 1) is a Cayley
permutation when its set of values is {1, ..., max(x)}.  Four classical
position statistics are attached to a word: the ascent tops and bottoms
and the descent tops and bottoms.  By convention position 1 belongs to
all four sets.  Matching one of these sets against the set of leftmost
occurrences singles out four families of Cayley permutations; the
ascent-bottom variant is the family of revised ascent sequences that
most of this package revolves around.

Positions are 1-based everywhere.  Words are plain tuples of ints.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Optional

Word = tuple[int, ...]

# Exhaustive generation refuses lengths above this unless the caller
# raises the cap explicitly.  Counts grow like the Fishburn numbers,
# so every extra unit of length costs roughly a factor of eight.
DEFAULT_CAP = 14


class CapExceededError(Exception):
    """Enumeration request exceeds the configured length cap."""


class Family(enum.Enum):
    """Families of words singled out by their statistic sets.

    ASCENT    classical ascent sequences: x_1 = 1 and each entry is at
              most one more than the number of ascent tops of the
              preceding prefix.
    CAYLEY    words whose image is an initial segment {1..max}.
    MODIFIED  Cayley permutations whose ascent-top set equals the set
              of leftmost occurrences (modified ascent sequences).
    REVISED   Cayley permutations whose ascent-bottom set equals the
              set of leftmost occurrences (revised ascent sequences).
    DESTOP    like REVISED but matching descent tops instead.
    DESBOT    like MODIFIED but matching descent bottoms instead.
    """

    ASCENT = "asc"
    CAYLEY = "cayley"
    MODIFIED = "mod"
    REVISED = "rasc"
    DESTOP = "destop"
    DESBOT = "desbot"


def check_word(x: Iterable[int]) -> Word:
    """Return x as a tuple, rejecting anything that is not a valid word."""
    w = tuple(x)
    if not w:
        raise ValueError("word must be nonempty")
    for v in w:
        if not isinstance(v, int) or isinstance(v, bool) or v < 1:
            raise ValueError(f"word entries must be integers >= 1, got {v!r}")
    return w


def parse_word(text: str) -> Word:
    """Parse the textual form of a word.

    Words with all entries at most 9 are written as bare digit strings;
    anything else is comma-separated.

    >>> parse_word("135144312")
    (1, 3, 5, 1, 4, 4, 3, 1, 2)
    >>> parse_word("10,1,2")
    (10, 1, 2)
    """
    text = text.strip()
    if not text:
        raise ValueError("empty word")
    if "," in text:
        parts = [p.strip() for p in text.split(",")]
        if any(not p.isdigit() for p in parts):
            raise ValueError(f"bad word: {text!r}")
        return check_word(tuple(int(p) for p in parts))
    if not text.isdigit():
        raise ValueError(f"bad word: {text!r}")
    return check_word(tuple(int(c) for c in text))


def format_word(x: Iterable[int]) -> str:
    """Serialize a word; inverse of parse_word.

    >>> format_word((1, 3, 5, 1, 4, 4, 3, 1, 2))
    '135144312'
    >>> format_word((10, 1, 2))
    '10,1,2'
    """
    w = check_word(x)
    if max(w) <= 9:
        return "".join(str(v) for v in w)
    return ",".join(str(v) for v in w)


def ascent_tops(x: Iterable[int]) -> frozenset[int]:
    """Positions i with x_{i-1} < x_i, together with position 1.

    >>> sorted(ascent_tops((1, 3, 5, 1, 4, 4, 3, 1, 2)))
    [1, 2, 3, 5, 9]
    """
    w = check_word(x)
    return frozenset({1} | {i for i in range(2, len(w) + 1) if w[i - 2] < w[i - 1]})


def ascent_bottoms(x: Iterable[int]) -> frozenset[int]:
    """Positions i < n with x_i < x_{i+1}, together with position 1."""
    w = check_word(x)
    return frozenset({1} | {i for i in range(1, len(w)) if w[i - 1] < w[i]})


def descent_tops(x: Iterable[int]) -> frozenset[int]:
    """Positions i < n with x_i > x_{i+1}, together with position 1."""
    w = check_word(x)
    return frozenset({1} | {i for i in range(1, len(w)) if w[i - 1] > w[i]})


def descent_bottoms(x: Iterable[int]) -> frozenset[int]:
    """Positions i with x_{i-1} > x_i, together with position 1."""
    w = check_word(x)
    return frozenset({1} | {i for i in range(2, len(w) + 1) if w[i - 2] > w[i - 1]})


@dataclass(frozen=True)
class StatSets:
    """The four statistic sets of one word."""

    asctop: frozenset[int]
    ascbot: frozenset[int]
    destop: frozenset[int]
    desbot: frozenset[int]


def stat_sets(x: Iterable[int]) -> StatSets:
    """Compute all four statistic sets in one go."""
    w = check_word(x)
    return StatSets(
        asctop=ascent_tops(w),
        ascbot=ascent_bottoms(w),
        destop=descent_tops(w),
        desbot=descent_bottoms(w),
    )


def nub(x: Iterable[int]) -> frozenset[int]:
    """Positions carrying the leftmost copy of each value.

    >>> sorted(nub((2, 1, 2)))
    [1, 2]
    """
    w = check_word(x)
    seen: set[int] = set()
    out: list[int] = []
    for i, v in enumerate(w, start=1):
        if v not in seen:
            seen.add(v)
            out.append(i)
    return frozenset(out)


def is_cayley(x: Iterable[int]) -> bool:
    """True when the set of values is exactly {1, ..., max(x)}.

    >>> is_cayley((1, 1, 3))
    False
    >>> is_cayley((2, 1, 2))
    True
    """
    w = check_word(x)
    values = set(w)
    return values == set(range(1, max(values) + 1))


def is_ascent_sequence(x: Iterable[int]) -> bool:
    """True when x_1 = 1 and each entry is at most asctop(prefix) + 1.

    >>> is_ascent_sequence((1, 2, 2, 1, 3, 2, 4, 5))
    True
    >>> is_ascent_sequence((1, 1, 2, 1, 4, 2))
    False
    """
    w = check_word(x)
    if w[0] != 1:
        return False
    atop = 1
    for i in range(1, len(w)):
        if w[i] > atop + 1:
            return False
        if w[i] > w[i - 1]:
            atop += 1
    return True


def is_member(x: Iterable[int], family: Family) -> bool:
    """Membership test for any of the six families."""
    w = check_word(x)
    if family is Family.ASCENT:
        return is_ascent_sequence(w)
    if not is_cayley(w):
        return False
    if family is Family.CAYLEY:
        return True
    marks = nub(w)
    if family is Family.MODIFIED:
        return ascent_tops(w) == marks
    if family is Family.REVISED:
        return ascent_bottoms(w) == marks
    if family is Family.DESTOP:
        return descent_tops(w) == marks
    if family is Family.DESBOT:
        return descent_bottoms(w) == marks
    raise ValueError(f"unknown family {family!r}")


# Membership of every family is decided by constraints that close over
# prefixes, so generation is a straight backtracking search.  The only
# non-local conditions are Cayley completion (no value of [1..max] may
# stay missing) and, for the REVISED/DESTOP pair, the fact that the
# final position must repeat an earlier value.  Candidate values are
# tried in increasing order, which makes the output lexicographic.

AcceptFn = Callable[[list[int], int], bool]

_IMMEDIATE_ASC = 1  # MODIFIED: new value iff previous entry smaller
_IMMEDIATE_DESC = 2  # DESBOT: new value iff previous entry bigger
_DEFERRED_ASC = 3  # REVISED: position p-1 new iff x_{p-1} < x_p
_DEFERRED_DESC = 4  # DESTOP: position p-1 new iff x_{p-1} > x_p

_MODE = {
    Family.CAYLEY: 0,
    Family.MODIFIED: _IMMEDIATE_ASC,
    Family.DESBOT: _IMMEDIATE_DESC,
    Family.REVISED: _DEFERRED_ASC,
    Family.DESTOP: _DEFERRED_DESC,
}


def _search_cayley(n: int, mode: int, leaf: Callable[[list[int]], None],
                   accept: Optional[AcceptFn]) -> None:
    counts = [0] * (n + 2)
    entries: list[int] = []
    fresh: list[bool] = []

    def rec(maxv: int, missing: int) -> None:
        p = len(entries) + 1
        rest = n - p
        last = entries[-1] if entries else 0
        # Any value above maxv + rest - missing + 1 leaves more unseen
        # values below the maximum than there are open slots.
        limit = maxv + rest - missing + 1
        for v in range(1, limit + 1):
            if v <= maxv:
                nm = missing - (1 if counts[v] == 0 else 0)
                if nm > rest:
                    continue
                newmax = maxv
            else:
                nm = missing + (v - maxv - 1)
                if nm > rest:
                    break
                newmax = v
            isnew = counts[v] == 0
            if p > 1:
                if mode == _IMMEDIATE_ASC:
                    if isnew != (last < v):
                        continue
                elif mode == _IMMEDIATE_DESC:
                    if isnew != (last > v):
                        continue
                elif mode == _DEFERRED_ASC:
                    if p > 2 and fresh[-1] != (last < v):
                        continue
                    if p == n and isnew:
                        continue
                elif mode == _DEFERRED_DESC:
                    if p > 2 and fresh[-1] != (last > v):
                        continue
                    if p == n and isnew:
                        continue
            if accept is not None and not accept(entries, v):
                continue
            if p == n:
                if nm == 0:
                    entries.append(v)
                    leaf(entries)
                    entries.pop()
            else:
                entries.append(v)
                fresh.append(isnew)
                counts[v] += 1
                rec(newmax, nm)
                counts[v] -= 1
                fresh.pop()
                entries.pop()

    rec(0, 0)


def _search_ascent(n: int, leaf: Callable[[list[int]], None],
                   accept: Optional[AcceptFn]) -> None:
    entries: list[int] = []

    def rec(atop: int) -> None:
        p = len(entries) + 1
        last = entries[-1]
        for v in range(1, atop + 2):
            if accept is not None and not accept(entries, v):
                continue
            if p == n:
                entries.append(v)
                leaf(entries)
                entries.pop()
            else:
                entries.append(v)
                rec(atop + 1 if v > last else atop)
                entries.pop()

    if accept is not None and not accept(entries, 1):
        return
    if n == 1:
        leaf([1])
        return
    entries.append(1)
    rec(1)


def search_family(n: int, family: Family, leaf: Callable[[list[int]], None],
                  accept: Optional[AcceptFn] = None,
                  cap: int = DEFAULT_CAP) -> None:
    """Drive a backtracking search over one family.

    leaf receives the scratch entry list each time a full member is
    reached; it must copy if it wants to keep the word.  accept, when
    given, is consulted with (prefix, candidate) before every extension
    and may veto it; vetoing must be monotone for the search to stay
    exhaustive over the accepted set.
    """
    if n < 1:
        raise ValueError("length must be >= 1")
    if n > cap:
        raise CapExceededError(f"length {n} exceeds cap {cap}")
    if family is Family.ASCENT:
        _search_ascent(n, leaf, accept)
    else:
        _search_cayley(n, _MODE[family], leaf, accept)


def enumerate_family(n: int, family: Family, cap: int = DEFAULT_CAP) -> list[Word]:
    """All members of the family with length n, in lexicographic order.

    >>> [format_word(w) for w in enumerate_family(3, Family.REVISED)]
    ['111', '212']
    """
    out: list[Word] = []
    search_family(n, family, lambda e: out.append(tuple(e)), cap=cap)
    return out


@lru_cache(maxsize=None)
def count_family(n: int, family: Family, cap: int = DEFAULT_CAP) -> int:
    """Number of members of the family with length n."""
    total = [0]

    def leaf(_entries: list[int]) -> None:
        total[0] += 1

    search_family(n, family, leaf, cap=cap)
    return total[0]


@lru_cache(maxsize=None)
def family_members(n: int, family: Family) -> tuple[Word, ...]:
    """Cached enumeration for repeated small-n sweeps.  Capped at n = 10;
    stream through search_family for anything longer."""
    if n > 10:
        raise ValueError("family_members caches small lengths only; use search_family")
    return tuple(enumerate_family(n, family))
