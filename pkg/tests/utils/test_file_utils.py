import logging
from fractions import Fraction

import pytest

from zhom.dichotomy import Witness
from zhom.utils import EnvUtils, FileUtils, get_logger, oneline_object, set_log_level
from zhom.utils.errors import (
    InvalidCertificate,
    NotPrimePower,
    ParseError,
    SizeGuardExceeded,
    ZeroValue,
    ZhomError,
)
from zhom.utils.log import PACKAGE_LOGGER


def test_read_write_text(tmp_path):
    path = FileUtils.write_text(tmp_path / "nested" / "a.txt", "matrix 1\n")
    assert path.exists()
    assert FileUtils.read_text(str(path)) == "matrix 1\n"
    with pytest.raises(FileNotFoundError):
        FileUtils.read_text(tmp_path / "missing.txt")


def test_errors():
    e = ParseError("bad token", 3)
    assert e.line_no == 3
    assert str(e) == "line 3: bad token"
    assert str(ParseError("empty")) == "empty"
    guard = SizeGuardExceeded(1024, 10)
    assert (guard.work, guard.guard) == (1024, 10)
    for cls in (ParseError, SizeGuardExceeded, NotPrimePower, ZeroValue, InvalidCertificate):
        assert issubclass(cls, ZhomError)


def test_env(monkeypatch):
    monkeypatch.setenv("ZHOM_TEST_VALUE", "7")
    monkeypatch.setenv("ZHOM_TEST_FLAG", "Off")
    monkeypatch.setenv("ZHOM_TEST_BAD", "maybe")
    monkeypatch.delenv("ZHOM_TEST_MISSING", raising=False)
    assert EnvUtils.get_env("ZHOM_TEST_VALUE") == "7"
    assert EnvUtils.get_env("ZHOM_TEST_MISSING", "fallback") == "fallback"
    with pytest.raises(ValueError):
        EnvUtils.get_env("ZHOM_TEST_MISSING")
    assert EnvUtils.get_int("ZHOM_TEST_VALUE", 1) == 7
    assert EnvUtils.get_int("ZHOM_TEST_MISSING", 1) == 1
    with pytest.raises(ValueError):
        EnvUtils.get_int("ZHOM_TEST_BAD", 1)
    assert EnvUtils.get_flag("ZHOM_TEST_FLAG", True) is False
    assert EnvUtils.get_flag("ZHOM_TEST_MISSING", True) is True
    with pytest.raises(ValueError):
        EnvUtils.get_flag("ZHOM_TEST_BAD", False)
    EnvUtils.assert_env(["ZHOM_TEST_VALUE"])
    EnvUtils.assert_env("ZHOM_TEST_VALUE")
    with pytest.raises(ValueError, match="ZHOM_TEST_MISSING"):
        EnvUtils.assert_env(["ZHOM_TEST_VALUE", "ZHOM_TEST_MISSING"])


def test_logging_helpers():
    logger = get_logger("zhom.tests")
    assert hasattr(logger, "error_exc")
    assert logger.name.startswith(PACKAGE_LOGGER)
    assert oneline_object({"a": 1}) == '{"a": 1}'
    assert oneline_object(list(range(100)), limit=10).endswith("...")
    assert oneline_object(object()).startswith('"<object')
    assert oneline_object({"norm": Fraction(3, 2)}) == '{"norm": "3/2"}'
    witness = Witness(stage="step2", condition="orthogonality", details={"pair": [0, 1]})
    assert '"condition": "orthogonality"' in oneline_object(witness, limit=400)


def test_set_log_level():
    package = logging.getLogger(PACKAGE_LOGGER)
    previous = package.level
    try:
        set_log_level("DEBUG")
        assert get_logger("zhom.tests.level").getEffectiveLevel() == logging.DEBUG
        set_log_level("ERROR")
        assert get_logger("zhom.tests.later").getEffectiveLevel() == logging.ERROR
        assert get_logger("zhom.tests.pinned", "INFO").getEffectiveLevel() == logging.INFO
    finally:
        package.setLevel(previous)
