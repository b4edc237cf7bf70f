from .base import TRACTABLE, BaseCorpusEntry
from .entries import (
    Coloring3Entry as Coloring3Entry,
    Coloring4Entry as Coloring4Entry,
    Diag2Entry as Diag2Entry,
    Fourier2Entry as Fourier2Entry,
    Fourier3Entry as Fourier3Entry,
    Fourier3TwistedEntry as Fourier3TwistedEntry,
    Fourier4Entry as Fourier4Entry,
    Fourier5Entry as Fourier5Entry,
    H4Entry as H4Entry,
    Hadamard2Entry as Hadamard2Entry,
    HadamardEntry as HadamardEntry,
    NonCosetEntry as NonCosetEntry,
    NonOrthogonalEntry as NonOrthogonalEntry,
    NonQuadraticEntry as NonQuadraticEntry,
    VertexCoverEntry as VertexCoverEntry,
)


# factory class for corpus entries
class CorpusFactory:
    """
    Factory class for the named corpus matrices.
    """

    _registry: dict[str, type[BaseCorpusEntry]] = {}
    _names: list[str] = []

    def __init__(self):
        self._recurse_register(BaseCorpusEntry)

    def _recurse_register(self, cls: type[BaseCorpusEntry]) -> None:
        """
        Recursively register all subclasses of cls.
        """
        for subcls in cls.__subclasses__():
            if getattr(subcls, "name", None):
                self.register(subcls.name, subcls)
            self._recurse_register(subcls)

    @classmethod
    def get(cls, name: str) -> BaseCorpusEntry:
        """
        Get a corpus entry by name.
        """
        name_lower = name.lower()
        if name_lower not in cls._registry:
            raise KeyError(f"unknown corpus entry '{name}'; known: {', '.join(cls._names)}")
        return cls._registry[name_lower]()

    @classmethod
    def get_all(cls) -> list[str]:
        """
        Names of all registered entries, in registration order.
        """
        return list(cls._names)

    @classmethod
    def register(cls, name: str, entry_class: type[BaseCorpusEntry]) -> None:
        """
        Register a corpus entry class.

        :param name: The name of the entry.
        :param entry_class: The entry class to register.
        """
        if not issubclass(entry_class, BaseCorpusEntry):
            raise TypeError(f"{entry_class} is not a subclass of BaseCorpusEntry")
        if name.lower() not in cls._registry:
            cls._names.append(name.lower())
        cls._registry[name.lower()] = entry_class


CORPUS_FACTORY = CorpusFactory()

__all__ = ["TRACTABLE", "BaseCorpusEntry", "CorpusFactory", "CORPUS_FACTORY"]
