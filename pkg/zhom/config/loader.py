from hydra import compose, initialize
from omegaconf import DictConfig, OmegaConf

from .run_config import CorpusConfig, RunConfig


class ConfigLoader:
    """Config loader"""

    config_path = "../../configs"
    version_base = "1.3"

    @classmethod
    def _load_config_to_dict(cls, name: str = "default", config_path: str | None = None) -> DictConfig:
        config_path = config_path or cls.config_path
        with initialize(config_path=config_path, version_base=cls.version_base):
            cfg = compose(config_name=name)
            OmegaConf.resolve(cfg)
        return cfg

    @classmethod
    def load_run_config(cls, name: str = "default") -> RunConfig:
        """Load run config from /configs/run"""
        cfg = cls._load_config_to_dict(name, config_path="../../configs/run")
        return RunConfig.model_validate(OmegaConf.to_container(cfg))

    @classmethod
    def load_corpus_config(cls, name: str = "default") -> CorpusConfig:
        """Load corpus config from /configs/corpus"""
        if not name.startswith("corpus/"):
            name = "corpus/" + name
        cfg = cls._load_config_to_dict(name, config_path="../../configs")
        return CorpusConfig.model_validate(OmegaConf.to_container(cfg))
