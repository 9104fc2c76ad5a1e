"""
Partial Augmentation Vectors
- Canonical storage indexed by the classes (alpha^i, 1), i = 0..d-1
- Translation to and from the (1, beta^j) representative ordering
"""

from dataclasses import dataclass, field
from typing import Iterator, List, Sequence, Tuple

from .errors import DimensionMismatch

ALPHA_ORDERING = "alpha"
BETA_ORDERING = "beta"


@dataclass(frozen=True)
class EpsilonVector:
    """Entry i is the partial augmentation at the class of (alpha^i, 1)"""

    values: Tuple[int, ...]
    ordering: str = field(default=ALPHA_ORDERING, compare=False)

    def __post_init__(self):
        if len(self.values) < 1:
            raise DimensionMismatch("epsilon vector is empty")
        object.__setattr__(self, 'values', tuple(int(v) for v in self.values))
        if self.ordering not in (ALPHA_ORDERING, BETA_ORDERING):
            raise ValueError(f"unknown ordering {self.ordering!r}")

    @classmethod
    def of(cls, values: Sequence[int]) -> 'EpsilonVector':
        return cls(tuple(values))

    @classmethod
    def unit(cls, d: int, k: int = 0) -> 'EpsilonVector':
        return cls(tuple(1 if i == k % d else 0 for i in range(d)))

    @classmethod
    def from_beta_ordering(cls, values: Sequence[int]) -> 'EpsilonVector':
        """Values listed for (1, beta^j); (1, beta^j) is conjugate to (alpha^(-j), 1)"""
        d = len(values)
        canonical = [0] * d
        for j, value in enumerate(values):
            canonical[(-j) % d] = value
        return cls(tuple(canonical), ordering=BETA_ORDERING)

    @property
    def d(self) -> int:
        return len(self.values)

    @property
    def total(self) -> int:
        return sum(self.values)

    @property
    def support_size(self) -> int:
        return sum(1 for v in self.values if v)

    def beta_ordering(self) -> Tuple[int, ...]:
        return tuple(self.values[(-j) % self.d] for j in range(self.d))

    def one_indexed(self) -> Tuple[int, ...]:
        """(eps at alpha^1, ..., eps at alpha^d = 1), the 1-indexed listing"""
        return self.values[1:] + self.values[:1]

    def require_d(self, d: int):
        if self.d != d:
            raise DimensionMismatch(f"epsilon has {self.d} entries, expected {d}")

    def labels(self) -> List[str]:
        return [f"(alpha^{i},1)" for i in range(self.d)]

    def __getitem__(self, i: int) -> int:
        return self.values[i % self.d]

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __len__(self) -> int:
        return self.d
