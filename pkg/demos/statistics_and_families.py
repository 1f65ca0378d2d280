"""
Position statistics and the word families built from them
=========================================================

A quick tour: compute the four ascent/descent statistics of a single
word, then enumerate the smallest members of each family.
"""

from rascent import (
    Family,
    ascent_bottoms,
    ascent_tops,
    descent_bottoms,
    descent_tops,
    enumerate_family,
    format_word,
    nub,
    parse_word,
)

word = parse_word("135144312")
print("word:", format_word(word))

# Position 1 belongs to every statistic set by convention.
for name, stat in [
    ("ascent tops", ascent_tops),
    ("ascent bottoms", ascent_bottoms),
    ("descent tops", descent_tops),
    ("descent bottoms", descent_bottoms),
    ("leftmost occurrences", nub),
]:
    print(f"  {name:22s} {sorted(stat(word))}")

# The families pair one statistic against the leftmost-occurrence set.
# Ascent tops matching it gives the modified sequences; ascent bottoms
# matching it gives the revised ones, the family most of this package
# revolves around.
print()
for family in Family:
    members = enumerate_family(4, family)
    shown = " ".join(format_word(x) for x in members[:8])
    more = "" if len(members) <= 8 else f" ... ({len(members)} total)"
    print(f"{family.value:8s} length 4: {shown}{more}")

# Counting the revised family recovers the Fishburn numbers, shifted
# down by one index.
print()
counts = [len(enumerate_family(n, Family.REVISED)) for n in range(1, 9)]
print("revised-family counts, lengths 1..8:", counts)
