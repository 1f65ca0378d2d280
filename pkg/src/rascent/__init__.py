"""Revised ascent sequences: families, bijections, patterns, series.

The package enumerates Cayley permutations whose ascent-bottom set
equals the set of leftmost value occurrences, together with three
sibling families cut out by the other order statistics.  It provides
the relabeling bijection from ordinary ascent sequences, pattern
avoidance with closed-form cross-checks, generating trees, and exact
power-series oracles.
"""

from .words import (
    CapExceededError,
    DEFAULT_CAP,
    Family,
    StatSets,
    Word,
    ascent_bottoms,
    ascent_tops,
    count_family,
    descent_bottoms,
    descent_tops,
    enumerate_family,
    family_members,
    format_word,
    is_ascent_sequence,
    is_cayley,
    is_member,
    nub,
    parse_word,
    stat_sets,
)
from .maps import (
    ReviseTrace,
    add_entry,
    complement,
    remove_entry,
    revise,
    shift_trim,
    standardize,
    unrevise,
)
from .patterns import (
    FORM_NAMES,
    PATTERN_CAP,
    WilfClass,
    WilfReport,
    avoider_words,
    avoids,
    contains,
    count_avoiders,
    count_occurrences,
    matches_form,
    max_prefix_equivalent,
    wilf_classes,
)
from .gentree import (
    Rule,
    expand_level,
    label_counts,
    level_totals,
    rule_children,
    rule_children_123,
    smallest_rise_top,
    word_label,
)
from .series import PowerSeries
from .oracle import (
    GF_NAMES,
    OPEN_111_PREFIX,
    TABLE_ROWS,
    bell_numbers,
    catalan_numbers,
    closed_form,
    expand_gf,
    fishburn,
    recurrence_213,
    stirling2,
    system_132,
)
from .verify import Check, SUITE_NAMES, run_suite

__version__ = "0.1.0"

__all__ = [
    "CapExceededError",
    "Check",
    "DEFAULT_CAP",
    "FORM_NAMES",
    "Family",
    "GF_NAMES",
    "OPEN_111_PREFIX",
    "PATTERN_CAP",
    "PowerSeries",
    "TABLE_ROWS",
    "ReviseTrace",
    "Rule",
    "SUITE_NAMES",
    "StatSets",
    "WilfClass",
    "WilfReport",
    "Word",
    "add_entry",
    "ascent_bottoms",
    "ascent_tops",
    "avoider_words",
    "avoids",
    "bell_numbers",
    "catalan_numbers",
    "closed_form",
    "complement",
    "contains",
    "count_avoiders",
    "count_family",
    "count_occurrences",
    "descent_bottoms",
    "descent_tops",
    "enumerate_family",
    "expand_gf",
    "expand_level",
    "family_members",
    "fishburn",
    "format_word",
    "is_ascent_sequence",
    "is_cayley",
    "is_member",
    "label_counts",
    "level_totals",
    "matches_form",
    "max_prefix_equivalent",
    "nub",
    "parse_word",
    "recurrence_213",
    "remove_entry",
    "revise",
    "rule_children",
    "rule_children_123",
    "run_suite",
    "shift_trim",
    "smallest_rise_top",
    "standardize",
    "stat_sets",
    "stirling2",
    "system_132",
    "unrevise",
    "wilf_classes",
    "word_label",
]
