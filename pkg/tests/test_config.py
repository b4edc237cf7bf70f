import pytest
from pydantic import ValidationError

from zhom.config import ConfigLoader, CorpusConfig, RunConfig
from zhom.corpus import CORPUS_FACTORY
from zhom.utils.path import DIR_CONFIGS


def test_config_files_exist():
    for name in ("run/default.yaml", "run/quick.yaml", "corpus/default.yaml"):
        assert (DIR_CONFIGS / name).exists()


def test_load_run_config():
    config = ConfigLoader.load_run_config("default")
    print(config)
    assert config.size_guard == 20_000_000
    assert config.threads == 1
    assert config.digits == 12
    assert config.mode == "auto"
    assert config.log_level in ("DEBUG", "INFO", "WARNING", "ERROR")


def test_load_quick_run_config():
    config = ConfigLoader.load_run_config("quick")
    assert config.size_guard == 200_000
    assert config.digits == 6
    assert config.threads == 1


def test_load_corpus_config():
    config = ConfigLoader.load_corpus_config("default")
    print(config)
    assert isinstance(config, CorpusConfig)
    assert sorted(config.entries) == sorted(CORPUS_FACTORY.get_all())
    assert config.seed == 2024
    assert (config.graph_count, config.max_vertices, config.max_total_multiplicity) == (100, 6, 12)
    assert CorpusConfig().graph_count == config.graph_count
    assert config.run.size_guard == 20_000_000
    assert ConfigLoader.load_corpus_config("corpus/default") == config


def test_run_config_validation():
    with pytest.raises(ValidationError):
        RunConfig(threads=0)
    with pytest.raises(ValidationError):
        RunConfig(mode="fastest")
    with pytest.raises(ValidationError):
        RunConfig(digits=0)
    assert str(RunConfig()).startswith("RunConfig(size_guard=")
    assert RunConfig(log_level="debug").log_level == "DEBUG"


def test_config_models_are_strict():
    with pytest.raises(ValidationError):
        RunConfig(colour=True)
    config = RunConfig()
    with pytest.raises(ValidationError):
        config.threads = 0
    config.threads = 4
    assert config.threads == 4
