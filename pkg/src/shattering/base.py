"""Base shattering construction and the construction registry."""

from abc import ABC, abstractmethod
from typing import Any, Dict, List, Optional, Type

from ..utils import InvalidInputError, get_logger
from .models import ShatterReport

logger = get_logger(__name__)


class ShatterConstruction(ABC):
    """A named construction that builds witnesses and checks them exhaustively."""

    name: str = ""

    @abstractmethod
    def run(self) -> ShatterReport:
        """
        Build witnesses for every dichotomy and verify them.

        Returns:
            Report listing the realized patterns and their witnesses.
        """
        pass

    @abstractmethod
    def evaluate_witness(self, record: Dict[str, Any]) -> Optional[str]:
        """Re-evaluate a stored witness record and return the pattern key it realizes."""
        pass

    def verify_witnesses(self, report: ShatterReport) -> List[str]:
        """Keys whose stored witness does not reproduce the claimed pattern."""
        mismatched = [
            key for key, record in report.witnesses.items()
            if self.evaluate_witness(record) != key
        ]
        if mismatched:
            logger.warning(f"Witness re-evaluation failed: {self.name}", mismatched=len(mismatched))
        return mismatched


class ConstructionRegistry:
    """Registry mapping construction names to classes."""

    def __init__(self):
        self._constructions: Dict[str, Type[ShatterConstruction]] = {}

    def register(self, cls: Type[ShatterConstruction]) -> Type[ShatterConstruction]:
        """Register a construction class under its name; usable as a decorator."""
        self._constructions[cls.name] = cls
        return cls

    def get(self, name: str) -> Optional[Type[ShatterConstruction]]:
        return self._constructions.get(name)

    def names(self) -> List[str]:
        return sorted(self._constructions)

    def create(self, name: str, **kwargs: Any) -> ShatterConstruction:
        cls = self.get(name)
        if cls is None:
            raise InvalidInputError(f"unknown construction {name!r}; expected one of {self.names()}")
        return cls(**kwargs)

    def run(self, name: str, **kwargs: Any) -> ShatterReport:
        """Create, run and log one construction."""
        construction = self.create(name, **kwargs)
        logger.info(f"Running construction: {name}")
        report = construction.run()
        logger.info(
            f"Construction finished: {name}",
            status=report.status.value,
            patterns=len(report.patterns_found),
            expected=report.expected_patterns,
        )
        return report


# Global registry instance
constructions = ConstructionRegistry()
