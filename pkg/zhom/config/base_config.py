from pydantic import BaseModel, ConfigDict


class ConfigBaseModel(BaseModel):
    """Base of the config models: unknown keys are rejected, assignments are validated, and ``str()`` is the
    one-line ``Name(field=value, ...)`` form used in log lines."""

    model_config = ConfigDict(extra="forbid", validate_assignment=True)

    def __repr__(self) -> str:
        fields = ", ".join(f"{name}={value!r}" for name, value in self.__repr_args__() if name is not None)
        return f"{type(self).__name__}({fields})"

    __str__ = __repr__
