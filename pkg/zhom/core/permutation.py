from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass


@dataclass(frozen=True, slots=True)
class Permutation:
    """A bijection of ``[0, n)``; ``image[i]`` is the old index placed at new position ``i``."""

    image: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.image) != list(range(len(self.image))):
            raise ValueError(f"not a permutation: {self.image}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(n)))

    @classmethod
    def of(cls, image: Sequence[int]) -> Permutation:
        return cls(tuple(image))

    def __len__(self) -> int:
        return len(self.image)

    def __call__(self, i: int) -> int:
        return self.image[i]

    def inverse(self) -> Permutation:
        out = [0] * len(self.image)
        for new, old in enumerate(self.image):
            out[old] = new
        return Permutation(tuple(out))

    def compose(self, other: Permutation) -> Permutation:
        """``self ∘ other``: first apply ``other``'s reindexing, then ``self``'s."""
        return Permutation(tuple(other.image[i] for i in self.image))

    def is_identity(self) -> bool:
        return all(i == v for i, v in enumerate(self.image))
