from enum import Enum, auto

"""
Color enum module

The Color enum is used to represent the color on terminal, both for log
levels and for verdict lines printed by the CLI.
"""


class Color(Enum):
    DEFAULT = auto()
    BLACK = auto()
    RED = auto()
    GREEN = auto()
    YELLOW = auto()
    BLUE = auto()
    MAGENTA = auto()
    CYAN = auto()
    WHITE = auto()


def verdict_color(verdict) -> Color:
    """GREEN for a holding property, RED for a failing one, YELLOW otherwise."""
    if verdict is True:
        return Color.GREEN
    if verdict is False:
        return Color.RED
    return Color.YELLOW
