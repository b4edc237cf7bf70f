import pytest

from zhom.core import PureMatrix, hadamard
from zhom.corpus import CORPUS_FACTORY, TRACTABLE, BaseCorpusEntry, CorpusFactory
from zhom.corpus.entries import HadamardEntry


def test_get_all():
    names = CORPUS_FACTORY.get_all()
    assert len(names) == 15
    assert names[0] == "hadamard"
    assert {"vertex-cover", "non-coset", "non-quadratic", "fourier3-twisted"} <= set(names)


def test_get():
    entry = CORPUS_FACTORY.get("Hadamard")
    assert isinstance(entry, HadamardEntry)
    assert entry.build() == hadamard()
    assert entry.tractable
    with pytest.raises(KeyError):
        CORPUS_FACTORY.get("no-such-matrix")


@pytest.mark.parametrize("name", CORPUS_FACTORY.get_all())
def test_entries(name: str):
    entry = CORPUS_FACTORY.get(name)
    assert entry.description
    assert entry.expected == TRACTABLE or entry.expected.startswith("P-HARD step")
    assert isinstance(entry.build(), PureMatrix)


def test_register(monkeypatch):
    monkeypatch.setattr(CorpusFactory, "_registry", dict(CorpusFactory._registry))
    monkeypatch.setattr(CorpusFactory, "_names", list(CorpusFactory._names))

    class SingleEntry(BaseCorpusEntry):
        description = "1x1 identity"

        def build(self) -> PureMatrix:
            return PureMatrix.from_rows([[1]])

    CorpusFactory.register("single", SingleEntry)
    assert CORPUS_FACTORY.get_all()[-1] == "single"
    assert CORPUS_FACTORY.get("single").build().dim == 1
    with pytest.raises(TypeError):
        CorpusFactory.register("bogus", int)  # type: ignore[arg-type]
