"""Environment access. A ``.env`` at the repository root (or the nearest one found upwards) is loaded once, without
overriding variables already set in the process."""

import os
import pathlib

from dotenv import find_dotenv, load_dotenv

_REPO_ENV = pathlib.Path(__file__).resolve().parents[2] / ".env"
load_dotenv(_REPO_ENV if _REPO_ENV.exists() else find_dotenv(usecwd=True), override=False)

_TRUE = {"1", "true", "yes", "on"}
_FALSE = {"0", "false", "no", "off", ""}


class EnvUtils:
    @staticmethod
    def get_env(key: str, default: str | None = None) -> str:
        """``os.environ[key]``; an unset or empty variable falls back to ``default`` or raises ValueError."""
        value = os.getenv(key)
        if value:
            return value
        if default is None:
            raise ValueError(f"Environment variable {key} is not set")
        return default

    @staticmethod
    def get_int(key: str, default: int) -> int:
        value = os.getenv(key)
        if not value:
            return default
        try:
            return int(value)
        except ValueError:
            raise ValueError(f"Environment variable {key}={value!r} is not an integer") from None

    @staticmethod
    def get_flag(key: str, default: bool) -> bool:
        value = os.getenv(key)
        if value is None:
            return default
        if value.strip().lower() in _TRUE:
            return True
        if value.strip().lower() in _FALSE:
            return False
        raise ValueError(f"Environment variable {key}={value!r} is not a boolean")

    @staticmethod
    def assert_env(keys: str | list[str]) -> None:
        missing = [k for k in ([keys] if isinstance(keys, str) else keys) if not os.getenv(k)]
        if missing:
            raise ValueError(f"Environment variables not set: {', '.join(missing)}")
