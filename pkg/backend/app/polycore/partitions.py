"""Integer partitions indexing exceptional Hermite families."""

from dataclasses import dataclass
from typing import Tuple

from backend.app.core.errors import InvalidPartitionError


@dataclass(frozen=True)
class Partition:
    """Non-decreasing sequence of non-negative integers ``λ_1 <= ... <= λ_r``."""

    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 0 for p in parts):
            raise InvalidPartitionError(f"partition parts must be non-negative: {parts}")
        if any(a > b for a, b in zip(parts, parts[1:])):
            raise InvalidPartitionError(f"partition parts must be non-decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, literal: str) -> "Partition":
        """Parse the comma-separated literal used by the CLI and config, e.g. ``"1,1,3,3"``."""
        text = (literal or "").strip()
        if not text:
            return cls(())
        try:
            return cls(tuple(int(token) for token in text.split(",") if token.strip()))
        except ValueError as e:
            raise InvalidPartitionError(f"cannot parse partition literal {literal!r}: {e}") from e

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def is_empty(self) -> bool:
        return not self.parts

    @property
    def is_double(self) -> bool:
        """Even length with equal consecutive pairs; the empty partition qualifies."""
        if len(self.parts) % 2:
            return False
        return all(self.parts[i] == self.parts[i + 1] for i in range(0, len(self.parts), 2))

    def hermite_indices(self) -> Tuple[int, ...]:
        """Degrees ``λ_i + i - 1`` of the Hermite entries of the Wronskian."""
        return tuple(part + i for i, part in enumerate(self.parts))

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)
