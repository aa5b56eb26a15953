# -*- coding: utf-8 -*-
"""Get environment variables."""

import os


def get_env(key, default_val=None):
    """Get an environment variable, or ``default_val`` when it is unset or empty.

    :param key: variable name
    :param default_val: value returned when the variable does not exist or is empty
    :return: the variable or the default
    """
    return os.getenv(key) if os.getenv(key) else default_val


def get_env_flag(key, default_val=False):
    """Read a boolean flag such as ``BDSA_NO_COLOR=1``."""
    value = get_env(key)
    if value is None:
        return default_val
    return value.strip().lower() in ("1", "true", "yes", "on")
