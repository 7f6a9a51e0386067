from typing import Dict, Any, Type, Optional
from pydantic import BaseModel, ValidationError
import json
import os

from src.algebra.ffla import is_prime
from src.algebra.quiverrep import Quiver
from src.utils.errors import ConfigError, ContractError
from src.utils.models import (
    HallConfig, ComplexPayload, ProductRequest, ElementPayload
)


class BaseValidator:
    """Base validator class with common validation methods"""

    def __init__(self, model: Type[BaseModel]):
        self.model = model

    def validate(self, data: Dict[str, Any]) -> Dict[str, Any]:
        """
        Validate data against the model schema.

        Args:
            data: Dictionary containing data to validate

        Returns:
            Dict with validation results
        """
        try:
            validated_data = self.model.model_validate(data)
            problem = self.check(validated_data)
            if problem:
                return {
                    "valid": False,
                    "data": None,
                    "error": problem
                }

            return {
                "valid": True,
                "data": validated_data,
                "error": None
            }

        except ValidationError as e:
            return {
                "valid": False,
                "data": None,
                "error": str(e),
                "error_details": e.errors()
            }

    def check(self, model: BaseModel) -> Optional[str]:
        """Semantic checks beyond the schema; returns an error message or None"""
        return None

    def validate_json_string(self, json_string: str) -> Dict[str, Any]:
        """
        Validate a JSON string.

        Args:
            json_string: JSON string to validate

        Returns:
            Dict with validation results
        """
        try:
            data = json.loads(json_string)
            return self.validate(data)
        except json.JSONDecodeError as e:
            return {
                "valid": False,
                "data": None,
                "error": f"Invalid JSON format: {str(e)}"
            }

    def validate_file(self, path: str) -> Dict[str, Any]:
        """Validate the JSON document stored at *path*"""
        try:
            with open(path, "r", encoding="utf-8") as handle:
                return self.validate_json_string(handle.read())
        except OSError as e:
            return {
                "valid": False,
                "data": None,
                "error": f"Cannot read {path}: {e.strerror}"
            }

    def load(self, path: str):
        """validate_file, raising ConfigError on failure"""
        result = self.validate_file(path)
        if not result["valid"]:
            raise ConfigError(f"{os.path.basename(path)}: {result['error']}")
        return result["data"]

    def get_schema(self) -> Dict[str, Any]:
        """Get the JSON schema for the model"""
        return self.model.model_json_schema()


class ConfigValidator(BaseValidator):
    """Validator for session configuration files"""

    def __init__(self):
        super().__init__(HallConfig)

    def check(self, config: HallConfig) -> Optional[str]:
        if not is_prime(config.q):
            return f"q = {config.q} is not prime"
        try:
            Quiver(config.quiver.vertex_count, tuple(tuple(a) for a in config.quiver.arrows))
        except ContractError as e:
            return str(e)
        cap = config.total_dim_cap
        if cap is not None and cap > sum(config.dim_caps):
            return f"total_dim_cap {cap} exceeds the sum of dim_caps {sum(config.dim_caps)}"
        return None


class ComplexValidator(BaseValidator):
    """Validator for complex files read by `reduce`"""

    def __init__(self):
        super().__init__(ComplexPayload)

    def check(self, payload: ComplexPayload) -> Optional[str]:
        degrees = [c.degree for c in payload.degrees]
        if len(degrees) != len(set(degrees)):
            return "each degree may appear only once"
        sources = [d.from_degree for d in payload.differentials]
        if len(sources) != len(set(sources)):
            return "each differential may appear only once"
        return None


class ProductValidator(BaseValidator):
    """Validator for `mult` operand files"""

    def __init__(self):
        super().__init__(ProductRequest)


class ElementValidator(BaseValidator):
    """Validator for single-element operand files (`iota`, `decompose`)"""

    def __init__(self):
        super().__init__(ElementPayload)
