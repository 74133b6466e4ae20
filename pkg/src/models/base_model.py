import inspect
from enum import Enum
from typing import Dict, Any

# Integers outside this range are written as decimal strings
JSON_INT_LIMIT = 2**63


class BaseModel:
    """Base class for records that travel through JSON."""

    @staticmethod
    def _encode(value: Any) -> Any:
        """Encode ints beyond 64-bit as strings, recursing into sequences."""
        if isinstance(value, bool):
            return value
        if isinstance(value, Enum):
            return value.value
        if isinstance(value, int):
            return value if -JSON_INT_LIMIT < value < JSON_INT_LIMIT else str(value)
        if isinstance(value, (list, tuple)):
            return [BaseModel._encode(v) for v in value]
        if isinstance(value, dict):
            return {k: BaseModel._encode(v) for k, v in value.items()}
        return value

    @staticmethod
    def _decode(value: Any) -> Any:
        """Turn decimal strings back into ints, recursing into lists."""
        if isinstance(value, str) and value.lstrip("-").isdigit():
            return int(value)
        if isinstance(value, list):
            return [BaseModel._decode(v) for v in value]
        return value

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'BaseModel':
        """Create a model instance from a dictionary."""
        if not isinstance(data, dict):
            return data

        init_params = inspect.signature(cls.__init__).parameters
        valid_keys = set(init_params) - {'self'}

        filtered_args = {k: cls._decode(v) for k, v in data.items() if k in valid_keys}
        extra_keys = set(data) - valid_keys

        if extra_keys:
            # hacky dynamic import b/c circular otherwise
            from src.logger import logger, ErrorEvent
            logger.log(ErrorEvent(
                error_type="Invalid key in obj init",
                message=f"{cls.__name__}.from_dict() got unexpected keys: {sorted(extra_keys)}",
                source=cls.__name__,
            ), "errors")

        return cls(**filtered_args)

    def to_dict(self) -> Dict[str, Any]:
        """Convert the model to a JSON-ready dictionary."""
        return {k: self._encode(v) for k, v in self.__dict__.items() if not k.startswith("_")}
