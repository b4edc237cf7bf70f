from .base_config import ConfigBaseModel
from .loader import ConfigLoader
from .run_config import CorpusConfig, RunConfig

__all__ = ["ConfigBaseModel", "ConfigLoader", "RunConfig", "CorpusConfig"]
