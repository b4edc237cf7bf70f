from .env import EnvUtils
from .errors import (
    InternalInconsistency,
    InvalidCertificate,
    NonDivisibleConductor,
    NonPureEntry,
    NotPrimePower,
    NotRational,
    NotSymmetric,
    ParseError,
    SizeGuardExceeded,
    ZeroValue,
    ZhomError,
)
from .log import get_logger, oneline_object, set_log_level, setup_logging
from .path import DIR_CONFIGS, DIR_ROOT, FileUtils

__all__ = [
    "EnvUtils",
    "FileUtils",
    "DIR_ROOT",
    "DIR_CONFIGS",
    "get_logger",
    "oneline_object",
    "setup_logging",
    "set_log_level",
    "ZhomError",
    "NonDivisibleConductor",
    "NotRational",
    "ParseError",
    "SizeGuardExceeded",
    "NotPrimePower",
    "ZeroValue",
    "InternalInconsistency",
    "NonPureEntry",
    "NotSymmetric",
    "InvalidCertificate",
]
