"""The module contains some common functions."""

import hashlib
import json
import logging

from pydantic import BaseModel

logger = logging.getLogger(__name__)


def get_md5(arg_str):
    md5 = hashlib.md5()
    md5.update(arg_str.encode("utf-8"))
    md5_value = md5.hexdigest()
    return md5_value


def to_json(obj, indent=None):
    """Canonical JSON: sorted keys, aliases for pydantic models.

    Two calls on equal inputs produce byte-identical text.
    """
    if isinstance(obj, str):
        return obj
    if isinstance(obj, BaseModel):
        obj = obj.model_dump(by_alias=True, mode="json")
    return json.dumps(obj, ensure_ascii=False, sort_keys=True, indent=indent, default=str)
