"""
Scanning short patterns for equal avoider counts
================================================
"""

from collections import defaultdict

from rascent import (
    Family,
    count_avoiders,
    enumerate_family,
    format_word,
    max_prefix_equivalent,
)

# Group every Cayley pattern of length up to 3 by its avoider-count
# profile over small lengths.  Patterns sharing a profile are
# candidates for a genuine equivalence; the split below matches the
# known classification.
n_max = 8
profiles = defaultdict(list)
for k in (1, 2, 3):
    for pattern in enumerate_family(k, Family.CAYLEY):
        profile = tuple(count_avoiders(n, pattern) for n in range(1, n_max + 1))
        profiles[profile].append(pattern)

for profile, patterns in sorted(profiles.items(), reverse=True):
    names = ", ".join(format_word(p) for p in patterns)
    print(f"{{{names}}}")
    print(f"  counts to length {n_max}: {list(profile)}")
print()

# Two of the multi-member classes are theorems, not just data: 231/321
# and 121/211 have identical avoider sets, and any pattern may have a
# copy of its maximum glued to its front without changing its avoiders.
for p in [(1, 2), (1, 2, 1), (2, 3, 1), (1, 3, 2)]:
    extended = (max(p),) + p
    same = max_prefix_equivalent(p, 8)
    print(f"{format_word(p)} vs {format_word(extended)}: "
          f"avoider sets agree to length 8: {same}")
