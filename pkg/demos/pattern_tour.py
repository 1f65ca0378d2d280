"""
Pattern containment and the avoidance table
===========================================

Occurrences of a pattern are subsequences that copy its order type,
equalities included.  Avoiding a pattern cuts a family down to a
subset whose size often has a clean formula.
"""

from rascent import (
    avoider_words,
    avoids,
    closed_form,
    count_occurrences,
    format_word,
    matches_form,
    parse_word,
)

w = parse_word("135144312")
for p in ["11", "122", "312", "2121"]:
    pat = parse_word(p)
    print(f"occurrences of {p} in {format_word(w)}: "
          f"{count_occurrences(w, pat)}")
print()

# Each resolved table row packages a formula.  Printing formula next
# to brute force shows them agreeing.
for p in ["221", "312", "321", "213", "211", "112", "123", "132"]:
    pat = parse_word(p)
    brute = [len(avoider_words(n, pat)) for n in range(2, 9)]
    formula = [closed_form(pat, n) for n in range(2, 9)]
    tag = "ok" if brute == formula else "MISMATCH"
    print(f"avoid {p}: {brute} {tag}")
print()

# 111 is the lone open row; no formula, so only the raw counts.
print("avoid 111:", [len(avoider_words(n, (1, 1, 1))) for n in range(2, 9)],
      "(no closed form known)")
print()

# Five of the rows come with structural descriptions of the avoiders,
# checkable word by word without any pattern search.
n = 7
for form in ["221", "312", "321", "122", "211"]:
    pat = parse_word(form)
    described = [x for x in avoider_words(n, pat) if matches_form(x, form)]
    print(f"form {form} at length {n}: describes "
          f"{len(described)}/{len(avoider_words(n, pat))} avoiders")
print()

# Some avoider sets coincide outright; the first pair below is one of
# the two such equalities among length-3 patterns.
a = set(avoider_words(6, (2, 3, 1)))
b = set(avoider_words(6, (3, 2, 1)))
print("avoiders of 231 and 321 at length 6 identical:", a == b)
sample = sorted(a)[:6]
print("  shared members:", " ".join(format_word(x) for x in sample), "...")
print("  every one avoids both:",
      all(avoids(x, (2, 3, 1)) and avoids(x, (3, 2, 1)) for x in a))
