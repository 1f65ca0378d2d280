"""Bijections between ascent sequences, revised ascent sequences and
their pattern-restricted relatives.

The centrepiece is `revise`, which relabels an ascent sequence of
length n into a revised ascent sequence of length n + 1, and its
constructive inverse `unrevise`.  The one-letter extension `add_entry`
and its inverse `remove_entry` are the growth operations underlying
both the bijection and the generating trees.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .words import (
    Family,
    Word,
    ascent_bottoms,
    check_word,
    is_ascent_sequence,
    is_member,
)
from .patterns import avoids


@dataclass(frozen=True)
class ReviseTrace:
    """Full record of one application of `revise`.

    source    the ascent sequence that went in
    relabeled the same word after the incremental relabeling pass
    revised   the output: max(relabeled) prepended to relabeled
    bottoms   ascent-bottom positions of the source, in increasing order
    """

    source: Word
    relabeled: Word
    revised: Word
    bottoms: tuple[int, ...]


def revise(x: Iterable[int]) -> ReviseTrace:
    """Turn an ascent sequence into a revised ascent sequence.

    Walk the ascent-bottom positions of the source from left to right;
    at each such position i, bump every earlier entry that is >= the
    current entry at i.  Comparisons use the values as already bumped
    by earlier rounds.  Finally prepend the maximum of the result.

    >>> revise((1, 2, 1, 3, 2, 1, 2, 4)).revised
    (5, 4, 5, 3, 5, 4, 1, 2, 4)
    >>> revise((1,)).revised
    (1, 1)
    """
    w = check_word(x)
    if not is_ascent_sequence(w):
        raise ValueError(f"not an ascent sequence: {w}")
    bottoms = tuple(sorted(ascent_bottoms(w)))
    work = list(w)
    for i in bottoms:
        vi = work[i - 1]
        for j in range(i - 1):
            if work[j] >= vi:
                work[j] += 1
    relabeled = tuple(work)
    revised = (max(relabeled),) + relabeled
    return ReviseTrace(source=w, relabeled=relabeled, revised=revised, bottoms=bottoms)


def unrevise(y: Iterable[int]) -> Word:
    """The unique ascent sequence that `revise` maps onto y.

    Peels the last entry with `remove_entry` down to the length-2 seed,
    collecting the removed values; they are exactly x_n, ..., x_2.

    >>> unrevise((2, 1, 2))
    (1, 2)
    >>> unrevise((1, 1))
    (1,)
    """
    w = check_word(y)
    if len(w) < 2:
        raise ValueError("input must have length >= 2")
    if not is_member(w, Family.REVISED):
        raise ValueError(f"not a revised ascent sequence: {w}")
    tail: list[int] = []
    while len(w) > 2:
        tail.append(w[-1])
        w = remove_entry(w)
    # the only revised ascent sequence of length 2 is 11
    x = (1,) + tuple(reversed(tail))
    return x


def add_entry(x: Iterable[int], v: int) -> Word:
    """Append v, bumping earlier entries when v starts a new ascent.

    For v <= x_n the word is plainly extended.  Otherwise every entry
    before position n that is >= x_n gets incremented, and v lands at
    the end.  Valid range: 1 <= v <= max(x) + 1.

    >>> add_entry((1, 1), 2)
    (2, 1, 2)
    >>> add_entry((2, 1, 2), 3)
    (3, 1, 2, 3)
    """
    w = check_word(x)
    if not 1 <= v <= max(w) + 1:
        raise ValueError(f"entry {v} out of range for {w}")
    last = w[-1]
    if v <= last:
        return w + (v,)
    bumped = tuple(e + 1 if e >= last else e for e in w[:-1])
    return bumped + (last, v)


def remove_entry(y: Iterable[int]) -> Word:
    """Undo `add_entry`: strip the final entry and its bumps.

    >>> remove_entry((3, 1, 2, 3))
    (2, 1, 2)
    >>> remove_entry((1, 1, 1))
    (1, 1)
    """
    w = check_word(y)
    if len(w) < 2:
        raise ValueError("input must have length >= 2")
    if w[-1] <= w[-2]:
        return w[:-1]
    pivot = w[-2]
    lowered = tuple(e - 1 if e > pivot else e for e in w[:-2])
    return lowered + (pivot,)


def complement(x: Iterable[int]) -> Word:
    """Replace each entry v by max(x) + 1 - v.

    An involution on Cayley permutations; it swaps ascent tops with
    descent tops and ascent bottoms with descent bottoms while leaving
    the leftmost-occurrence set alone.

    >>> complement((1, 3, 5, 1, 4, 4, 3, 1, 2))
    (5, 3, 1, 5, 2, 2, 3, 5, 4)
    """
    w = check_word(x)
    m = max(w)
    return tuple(m + 1 - v for v in w)


def standardize(x: Iterable[int]) -> Word:
    """Relabel the values by their rank, preserving order and ties.

    >>> standardize((7, 4, 2, 4, 3, 2, 6))
    (5, 3, 1, 3, 2, 1, 4)
    """
    w = check_word(x)
    rank = {v: r for r, v in enumerate(sorted(set(w)), start=1)}
    return tuple(rank[v] for v in w)


def shift_trim(x: Iterable[int]) -> Word:
    """Cyclic value shift followed by dropping the last entry.

    Every value goes up by one, the new top value wraps around to 1,
    and the final position is removed.  Restricted to 211-avoiding
    revised ascent sequences this lands bijectively on the 122-avoiding
    modified ascent sequences, one letter shorter.

    >>> shift_trim((6, 4, 6, 3, 6, 1, 2, 6, 5, 6))
    (1, 5, 1, 4, 1, 2, 3, 1, 6)
    """
    w = check_word(x)
    if len(w) < 2:
        raise ValueError("input must have length >= 2")
    if not is_member(w, Family.REVISED):
        raise ValueError(f"not a revised ascent sequence: {w}")
    if not avoids(w, (2, 1, 1)):
        raise ValueError(f"input contains the pattern 211: {w}")
    top = max(w) + 1
    shifted = tuple(1 if v + 1 == top else v + 1 for v in w)
    return shifted[:-1]
