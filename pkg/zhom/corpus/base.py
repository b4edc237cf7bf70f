import abc

from ..core.matrix import PureMatrix

TRACTABLE = "TRACTABLE"


class BaseCorpusEntry:
    """A named matrix of the canonical corpus, with the verdict ``decide`` must return for it.

    Each entry implements:
      - build: construct the matrix
      - expected: ``TRACTABLE`` or ``P-HARD <stage>:<condition>``.
    """

    name: str = None
    expected: str = TRACTABLE
    description: str = ""

    @property
    def tractable(self) -> bool:
        return self.expected == TRACTABLE

    @abc.abstractmethod
    def build(self) -> PureMatrix:
        """Construct the matrix."""
        raise NotImplementedError
