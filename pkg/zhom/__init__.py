# ruff: noqa
from .utils import EnvUtils, setup_logging

setup_logging(EnvUtils.get_env("ZHOM_LOG_LEVEL", "WARNING").upper())
