"""Min-max trees, their group actions, and exact alternating-run identities."""

from .errors import HRRunsError
from .minmax_tree import MinMaxTree, build_tree, read_word
from .perm_core import PermWord, enumerate_perms, parse_perm, perm_stats

__version__ = "0.1.0"

__all__ = [
    "HRRunsError", "MinMaxTree", "PermWord", "build_tree", "enumerate_perms",
    "parse_perm", "perm_stats", "read_word",
]
