"""Pattern containment and avoidance for words with repeated letters.

A pattern is itself a Cayley permutation.  An occurrence of a pattern
p in a word x is a subsequence of x that is order-isomorphic to p with
equalities preserved: picked entries compare to each other exactly as
the corresponding pattern entries do.  So 4134232 has two occurrences
of 123 (134 and 123) and none of 112.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional

from .words import (
    DEFAULT_CAP,
    Family,
    Word,
    check_word,
    enumerate_family,
    is_cayley,
    search_family,
)

# Occurrence search is exponential in the pattern length, so the engine
# refuses anything longer than this.
PATTERN_CAP = 6


def check_pattern(p: Iterable[int]) -> Word:
    """Validate a pattern: a Cayley permutation of length <= 6."""
    w = check_word(p)
    if len(w) > PATTERN_CAP:
        raise ValueError(f"pattern longer than {PATTERN_CAP}: {w}")
    if not is_cayley(w):
        raise ValueError(f"pattern must be a Cayley permutation: {w}")
    return w


def _cmp(a: int, b: int) -> int:
    return (a > b) - (a < b)


def count_occurrences(x: Iterable[int], pattern: Iterable[int]) -> int:
    """Number of occurrences of the pattern in x.

    Pattern value classes are bound to word values one at a time; each
    candidate position must respect every binding made so far, which
    prunes hopeless partial matches early.

    >>> count_occurrences((1, 1, 1), (1, 1))
    3
    >>> count_occurrences((4, 1, 3, 4, 2, 3, 2), (1, 2, 3))
    2
    """
    w = check_word(x)
    p = check_pattern(pattern)
    k = len(p)
    n = len(w)
    if k > n:
        return 0
    bound: dict[int, int] = {}

    def rec(s: int, start: int) -> int:
        if s == k:
            return 1
        c = p[s]
        lo = max((bound[d] for d in bound if d < c), default=None)
        hi = min((bound[d] for d in bound if d > c), default=None)
        fixed = bound.get(c)
        total = 0
        for i in range(start, n - (k - s) + 1):
            v = w[i]
            if fixed is not None:
                if v != fixed:
                    continue
            else:
                if lo is not None and v <= lo:
                    continue
                if hi is not None and v >= hi:
                    continue
            if fixed is None:
                bound[c] = v
                total += rec(s + 1, i + 1)
                del bound[c]
            else:
                total += rec(s + 1, i + 1)
        return total

    return rec(0, 0)


def contains(x: Iterable[int], pattern: Iterable[int]) -> bool:
    """Existence version of count_occurrences, with early exit."""
    w = check_word(x)
    p = check_pattern(pattern)
    k = len(p)
    n = len(w)
    if k > n:
        return False
    bound: dict[int, int] = {}

    def rec(s: int, start: int) -> bool:
        if s == k:
            return True
        c = p[s]
        lo = max((bound[d] for d in bound if d < c), default=None)
        hi = min((bound[d] for d in bound if d > c), default=None)
        fixed = bound.get(c)
        for i in range(start, n - (k - s) + 1):
            v = w[i]
            if fixed is not None:
                if v != fixed:
                    continue
                if rec(s + 1, i + 1):
                    return True
            else:
                if lo is not None and v <= lo:
                    continue
                if hi is not None and v >= hi:
                    continue
                bound[c] = v
                if rec(s + 1, i + 1):
                    return True
                del bound[c]
        return False

    return rec(0, 0)


def avoids(x: Iterable[int], pattern: Iterable[int]) -> bool:
    """True when x has no occurrence of the pattern.

    >>> avoids((1, 2, 3, 4), (2, 1))
    True
    >>> avoids((4, 1, 3, 4, 2, 3, 2), (1, 1, 2))
    True
    """
    return not contains(x, pattern)


def _relation_table(p: Word) -> tuple[tuple[int, ...], ...]:
    k = len(p)
    return tuple(tuple(_cmp(p[s], p[t]) for t in range(k)) for s in range(k))


def _ends_with_occurrence(entries: list[int], v: int, p: Word,
                          rel: tuple[tuple[int, ...], ...]) -> bool:
    """Does appending v to entries create an occurrence whose last
    matched position is the new one?  Specialized loops for the short
    patterns that dominate; entries is the prefix without v."""
    k = len(p)
    m = len(entries)
    if m < k - 1:
        return False
    if k == 1:
        return True
    if k == 2:
        r = rel[0][1]
        for u in entries:
            if _cmp(u, v) == r:
                return True
        return False
    if k == 3:
        r02, r12, r01 = rel[0][2], rel[1][2], rel[0][1]
        for j in range(m - 1, 0, -1):
            b = entries[j]
            if _cmp(b, v) != r12:
                continue
            for i in range(j):
                a = entries[i]
                if _cmp(a, b) == r01 and _cmp(a, v) == r02:
                    return True
        return False
    if k == 4:
        r03, r13, r23 = rel[0][3], rel[1][3], rel[2][3]
        r01, r02, r12 = rel[0][1], rel[0][2], rel[1][2]
        for t in range(m - 1, 1, -1):
            c = entries[t]
            if _cmp(c, v) != r23:
                continue
            for j in range(1, t):
                b = entries[j]
                if _cmp(b, c) != r12 or _cmp(b, v) != r13:
                    continue
                for i in range(j):
                    a = entries[i]
                    if _cmp(a, b) == r01 and _cmp(a, c) == r02 and _cmp(a, v) == r03:
                        return True
        return False
    # General fallback for patterns of length 5 or 6.
    chosen = [0] * k
    chosen[k - 1] = v

    def rec(s: int, start: int) -> bool:
        if s == k - 1:
            return True
        for i in range(start, m - (k - 2 - s)):
            u = entries[i]
            ok = _cmp(u, v) == rel[s][k - 1]
            if ok:
                for t in range(s):
                    if _cmp(chosen[t], u) != rel[t][s]:
                        ok = False
                        break
            if ok:
                chosen[s] = u
                if rec(s + 1, i + 1):
                    return True
        return False

    return rec(0, 0)


def _avoid_filter(p: Word):
    rel = _relation_table(p)
    k1 = len(p) == 1

    def accept(entries: list[int], v: int) -> bool:
        if k1:
            return False
        return not _ends_with_occurrence(entries, v, p, rel)

    return accept


def avoider_words(n: int, pattern: Iterable[int], family: Family = Family.REVISED,
                  cap: int = DEFAULT_CAP) -> list[Word]:
    """Members of the family of length n avoiding the pattern, in
    lexicographic order.  Generation prunes any prefix that already
    contains the pattern, so the work scales with the avoider count."""
    p = check_pattern(pattern)
    out: list[Word] = []
    search_family(n, family, lambda e: out.append(tuple(e)),
                  accept=_avoid_filter(p), cap=cap)
    return out


@lru_cache(maxsize=None)
def count_avoiders(n: int, pattern: Word, family: Family = Family.REVISED,
                   cap: int = DEFAULT_CAP) -> int:
    """Number of members of the family of length n avoiding the pattern.

    >>> count_avoiders(6, (1, 1, 1))
    10
    """
    p = check_pattern(pattern)
    total = [0]

    def leaf(_entries: list[int]) -> None:
        total[0] += 1

    search_family(n, family, leaf, accept=_avoid_filter(p), cap=cap)
    return total[0]


@dataclass(frozen=True)
class WilfClass:
    """Patterns sharing one avoidance-count sequence."""

    patterns: tuple[Word, ...]
    counts: tuple[int, ...]


@dataclass(frozen=True)
class WilfReport:
    """Partition of all patterns of one length by count sequence.

    Counts run over n = 1 .. n_max, so equality of two classes is only
    evidence up to that length, not a theorem.
    """

    pattern_length: int
    n_max: int
    classes: tuple[WilfClass, ...]


def wilf_classes(pattern_length: int, n_max: int,
                 family: Family = Family.REVISED,
                 cap: int = DEFAULT_CAP) -> WilfReport:
    """Group all Cayley permutations of one length by their avoidance
    counts in the family, for n = 1 .. n_max.

    Engine cap: pattern_length <= 4.
    """
    if not 1 <= pattern_length <= 4:
        raise ValueError("pattern length must be between 1 and 4")
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    groups: dict[tuple[int, ...], list[Word]] = {}
    for p in enumerate_family(pattern_length, Family.CAYLEY):
        seq = tuple(count_avoiders(n, p, family, cap=cap) for n in range(1, n_max + 1))
        groups.setdefault(seq, []).append(p)
    classes = tuple(
        WilfClass(patterns=tuple(sorted(ps)), counts=seq)
        for seq, ps in sorted(groups.items())
    )
    return WilfReport(pattern_length=pattern_length, n_max=n_max, classes=classes)


def max_prefix_equivalent(pattern: Iterable[int], n_max: int,
                          family: Family = Family.REVISED,
                          cap: int = DEFAULT_CAP) -> bool:
    """Check that avoiding p equals avoiding max(p)*p on the family.

    Applies to patterns whose second entry is the unique maximum;
    prepending that maximum then provably leaves the avoider set alone.
    Compares avoider sets exactly for every n up to n_max.
    """
    p = check_pattern(pattern)
    m = max(p)
    if len(p) < 2 or p[1] != m or p.count(m) != 1:
        raise ValueError(f"second entry must be the unique maximum: {p}")
    extended = check_pattern((m,) + p)
    for n in range(1, n_max + 1):
        if avoider_words(n, p, family, cap=cap) != avoider_words(n, extended, family, cap=cap):
            return False
    return True


# ---------------------------------------------------------------------------
# Shape validators for the five structurally solved avoidance families.
# Each checks the shape alone; intersected with the revised ascent
# sequences of length n it carves out exactly the avoiders of the
# corresponding pattern.

def _runs(x: Word) -> list[tuple[int, int]]:
    """Maximal constant runs as (value, length) pairs."""
    out: list[tuple[int, int]] = []
    for v in x:
        if out and out[-1][0] == v:
            out[-1] = (v, out[-1][1] + 1)
        else:
            out.append((v, 1))
    return out


def _form_221(x: Word) -> bool:
    # m 1 2 ... (m-1) m^(n-m)
    m = x[0]
    expected = (m,) + tuple(range(1, m)) + (m,) * (len(x) - m)
    return len(x) >= m and x == expected


def _form_312(x: Word) -> bool:
    # m^a (m-1) m^a' (m-1)^b (m-2) m^a'' (m-2)^b' ... 1 m^a* 1^b*
    m = x[0]
    if m == 1:
        return all(v == 1 for v in x)
    i, n = 0, len(x)
    while i < n and x[i] == m:
        i += 1
    if i == 0:
        return False
    for k in range(m - 1, 0, -1):
        if i >= n or x[i] != k:
            return False
        i += 1
        j = i
        while i < n and x[i] == m:
            i += 1
        if i == j:  # at least one m after each descent step
            return False
        while i < n and x[i] == k:
            i += 1
    return i == n


def _form_321(x: Word) -> bool:
    # m^c 1 m^* 2 m^* ... (m-2) m^* (m-1) m^+ (m-1)^*
    m = x[0]
    if m == 1:
        return all(v == 1 for v in x)
    i, n = 0, len(x)
    while i < n and x[i] == m:
        i += 1
    if i == 0:
        return False
    for k in range(1, m - 1):
        if i >= n or x[i] != k:
            return False
        i += 1
        while i < n and x[i] == m:
            i += 1
    if i >= n or x[i] != m - 1:
        return False
    i += 1
    j = i
    while i < n and x[i] == m:
        i += 1
    if i == j:  # the final maximum run may not be empty
        return False
    while i < n and x[i] == m - 1:
        i += 1
    return i == n


def _form_122(x: Word) -> bool:
    # a1^(b+1) then for a1 > a2 > ... > a_i = 1: ascending run a_{j+1}..a_j
    # followed by a_{j+1}^*; the word ends once level 1 is reached.
    m = x[0]
    if m == 1:
        return all(v == 1 for v in x)
    i, n = 0, len(x)
    while i < n and x[i] == m:
        i += 1
    cur = m
    while cur > 1:
        if i >= n or x[i] >= cur:
            return False
        nxt = x[i]
        for v in range(nxt, cur + 1):  # ascending run nxt, nxt+1, ..., cur
            if i >= n or x[i] != v:
                return False
            i += 1
        while i < n and x[i] == nxt:
            i += 1
        cur = nxt
    return i == n


def _form_211(x: Word) -> bool:
    # m B1 m B2 ... m Bk m with strictly increasing blocks below m that
    # together use each of 1..m-1 exactly once.
    m = x[0]
    n = len(x)
    if m == 1:
        return all(v == 1 for v in x)
    if x[-1] != m:
        return False
    seen: set[int] = set()
    prev_small: Optional[int] = None
    for v in x:
        if v == m:
            prev_small = None
            continue
        if v > m or v in seen:
            return False
        if prev_small is not None and v <= prev_small:
            return False
        seen.add(v)
        prev_small = v
    return seen == set(range(1, m))


_FORM_CHECKS = {
    "221": _form_221,
    "312": _form_312,
    "321": _form_321,
    "122": _form_122,
    "211": _form_211,
}

FORM_NAMES = tuple(sorted(_FORM_CHECKS))


def matches_form(x: Iterable[int], form: str) -> bool:
    """Test a word against one of the named shapes.

    >>> matches_form((3, 1, 2, 3, 3, 3), "221")
    True
    >>> matches_form((2, 1, 2, 2), "211")
    True
    """
    w = check_word(x)
    try:
        checker = _FORM_CHECKS[form]
    except KeyError:
        raise ValueError(f"unknown form {form!r}; choose from {FORM_NAMES}") from None
    return checker(w)
