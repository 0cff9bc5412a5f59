"""Symbolic-dynamical toolkit for the first Grigorchuk group.

The package implements the group's defining action on the binary tree,
its jump action on starred alternating words, the associated minimal
substitutive Z-shift with its language oracle, the Gray-code conjugacy
between starrings and tree levels, full-group mechanics on finite
windows, and a one-dimensional SFT engine with the union and comb
constructions.
"""

from . import core_words, full_group, gray_factor, jump_action, subshift, tree_action
from .errors import StarshiftError

__all__ = [
    "core_words",
    "tree_action",
    "jump_action",
    "gray_factor",
    "full_group",
    "subshift",
    "StarshiftError",
]

__version__ = "0.1.0"
