"""Service layer for the mixed braid tools."""

from . import (  # noqa: F401
    braid_core,
    combing,
    coset_split,
    free_group,
    grammar,
    mixed_braid,
    permutation,
    presentations,
    reports,
    settings,
    word_problem,
)

__all__ = [
    "braid_core",
    "combing",
    "coset_split",
    "free_group",
    "grammar",
    "mixed_braid",
    "permutation",
    "presentations",
    "reports",
    "settings",
    "word_problem",
]
