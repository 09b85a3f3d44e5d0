"""Exhaustive checks of echelonmotion, parking function and plactic centralizer identities."""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401


def poly_dict(terms):
    """Turns the JSON polynomial form into {(q_exp, t_exp): int}."""
    return {(term["q"], term["t"]): int(term["c"]) for term in terms}
