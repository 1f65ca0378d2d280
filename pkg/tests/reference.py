"""Naive reference implementations used as oracles by the tests.

Everything here trades speed for obviousness: filter all endofunctions,
find subsequences with itertools.combinations, count set partitions by
direct recursion.  Nothing imports from the package under test, so an
agreement between the two is meaningful.
"""

from __future__ import annotations

import itertools


def ascent_top_positions(w):
    n = len(w)
    return {1} | {i for i in range(2, n + 1) if w[i - 2] < w[i - 1]}


def ascent_bottom_positions(w):
    n = len(w)
    return {1} | {i for i in range(1, n) if w[i - 1] < w[i]}


def descent_top_positions(w):
    n = len(w)
    return {1} | {i for i in range(1, n) if w[i - 1] > w[i]}


def descent_bottom_positions(w):
    n = len(w)
    return {1} | {i for i in range(2, n + 1) if w[i - 2] > w[i - 1]}


def leftmost_positions(w):
    seen = set()
    out = set()
    for i, v in enumerate(w, start=1):
        if v not in seen:
            seen.add(v)
            out.add(i)
    return out


def is_cayley_word(w):
    return set(w) == set(range(1, max(w) + 1))


def is_classic_ascent_sequence(w):
    if w[0] != 1:
        return False
    for i in range(1, len(w)):
        if not 1 <= w[i] <= len(ascent_top_positions(w[:i])) + 1:
            return False
    return True


_PREDICATES = {
    "asc": is_classic_ascent_sequence,
    "cayley": is_cayley_word,
    "mod": lambda w: is_cayley_word(w) and ascent_top_positions(w) == leftmost_positions(w),
    "rasc": lambda w: is_cayley_word(w) and ascent_bottom_positions(w) == leftmost_positions(w),
    "destop": lambda w: is_cayley_word(w) and descent_top_positions(w) == leftmost_positions(w),
    "desbot": lambda w: is_cayley_word(w) and descent_bottom_positions(w) == leftmost_positions(w),
}


def brute_family(n, kind):
    """All members of one family at length n, by filtering n^n words."""
    keep = _PREDICATES[kind]
    out = []
    for w in itertools.product(range(1, n + 1), repeat=n):
        if keep(w):
            out.append(w)
    return out


def rank_profile(seq):
    levels = sorted(set(seq))
    return tuple(levels.index(v) + 1 for v in seq)


def count_subsequence_matches(text, pattern):
    """Occurrences of pattern in text, one combination at a time."""
    hits = 0
    target = rank_profile(pattern)
    for spots in itertools.combinations(range(len(text)), len(pattern)):
        if rank_profile([text[i] for i in spots]) == target:
            hits += 1
    return hits


def partitions_into_blocks(items):
    if not items:
        yield []
        return
    head, rest = items[0], items[1:]
    for split in partitions_into_blocks(rest):
        for i in range(len(split)):
            yield split[:i] + [split[i] + [head]] + split[i + 1:]
        yield split + [[head]]


def bell_by_partitions(n):
    return sum(1 for _ in partitions_into_blocks(list(range(n))))


def stirling_by_partitions(n, k):
    return sum(1 for split in partitions_into_blocks(list(range(n))) if len(split) == k)
