from .common_utils import get_md5, to_json
from .env_utils import get_env, get_env_flag

__all__ = ["get_env", "get_env_flag", "get_md5", "to_json"]
