"""Logging utilities.

Colored terminal output through *Colorama*, a plain file log, and optional
analysis context on each record:

    >>> from bdsa.log_setup import setup_logging
    >>> logger = setup_logging()
    >>> logger.warning("clipped J", extra={"instance": "f5.bds", "route": "quotient-L"})

Setting ``BDSA_NO_COLOR`` turns coloring off.
"""

import logging
import os
from typing import Optional

from colorama import Back, Fore, Style

from .config import Config
from .schemas.color import Color
from .utils.env_utils import get_env_flag

LEVEL_COLOR_MAP = {
    logging.DEBUG: Color.BLACK,
    logging.INFO: Color.GREEN,
    logging.WARNING: Color.MAGENTA,
    logging.ERROR: Color.RED,
    logging.CRITICAL: Color.RED,
}


class ContextAwareFormatter(logging.Formatter):
    """Renders the optional ``instance`` and ``route`` record extras.

    ``instance`` shows as `` - <instance> -`` and ``route`` as `` <route> -``;
    both collapse to nothing when absent.
    """

    def format(self, record):
        record.instance = f" - {record.instance} -" if hasattr(record, "instance") else ""
        record.route = f" {record.route} -" if hasattr(record, "route") else ""
        return super().format(record)


def get_style_by_record(record):
    """ANSI style for ``record``: its ``color`` extra if given, else the level color.

    Raises:
        ValueError: the ``color`` extra names no known color.
    """
    bold_style = Style.BRIGHT if Config.get_log_is_bright() else ""
    layer = Back if Config.get_log_color_is_on_background() else Fore
    level_color = LEVEL_COLOR_MAP.get(record.levelno, Color.WHITE)
    color_style = "" if level_color is Color.DEFAULT else getattr(layer, level_color.name)
    if hasattr(record, "color"):
        if isinstance(record.color, Color):
            color_upper = record.color.name
        elif isinstance(record.color, str):
            color_upper = record.color.upper()
        else:
            raise ValueError(f"unsupported color type {type(record.color).__name__}")
        if color_upper == Color.DEFAULT.name:
            color_style = ""
        elif hasattr(layer, color_upper):
            color_style = getattr(layer, color_upper)
        else:
            raise ValueError(f"undefined color {record.color!r}")
    return bold_style + color_style


class ColorFormatter(ContextAwareFormatter):
    """Colors the whole line."""

    def format(self, record):
        return f"{get_style_by_record(record)}{super().format(record)}{Style.RESET_ALL}"


class ColorMessageFormatter(ContextAwareFormatter):
    """Colors the message only."""

    def formatMessage(self, record):
        record.message = f"{get_style_by_record(record)}{record.getMessage()}{Style.RESET_ALL}"
        return super().formatMessage(record)


def setup_logging(path: Optional[str] = None) -> logging.Logger:
    """Wire the root logger from :class:`~bdsa.config.Config` and return it.

    ``path`` overrides ``log.path`` for the file handler.
    """
    log_path = path or Config.get_log_path()
    directory = os.path.dirname(log_path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    file_handler = logging.FileHandler(log_path, encoding="utf-8")
    file_handler.setLevel(Config.get_log_level_file())
    file_handler.setFormatter(
        ContextAwareFormatter(
            "%(asctime)s - %(levelname)s%(instance)s%(route)s %(name)s line:%(lineno)d - %(message)s"
        )
    )

    stream_handler = logging.StreamHandler()
    stream_handler.setLevel(Config.get_log_level_terminal())
    if get_env_flag("BDSA_NO_COLOR"):
        class_type = ContextAwareFormatter
    elif Config.get_log_only_message_color():
        class_type = ColorMessageFormatter
    else:
        class_type = ColorFormatter
    stream_handler.setFormatter(
        class_type("%(asctime)s - %(levelname)s%(instance)s%(route)s %(message)s")
    )

    logging.basicConfig(
        level=Config.get_log_level_root(), handlers=[stream_handler, file_handler]
    )
    return logging.getLogger()
