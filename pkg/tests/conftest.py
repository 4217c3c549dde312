import random
from pathlib import Path

import pytest

from defectcolor import generators as gen
from defectcolor.plane_graph import PlaneGraph, read_graph
from defectcolor.structure import in_class

CORPUS = Path(__file__).resolve().parent.parent / "src" / "defectcolor" / "corpus"


def corpus_paths() -> list[Path]:
    return sorted(CORPUS.glob("*.rot"))


def corpus_graphs() -> dict[str, PlaneGraph]:
    return {p.stem: read_graph(p) for p in corpus_paths()}


def class_members() -> dict[str, PlaneGraph]:
    return {k: G for k, G in corpus_graphs().items() if in_class(G).in_class}


@pytest.fixture(scope="session")
def corpus():
    return corpus_graphs()


@pytest.fixture(scope="session")
def members():
    return class_members()


def graph(name: str) -> PlaneGraph:
    return read_graph(CORPUS / f"{name}.rot")


def random_member(seed: int, lo: int = 6, hi: int = 20) -> PlaneGraph:
    rng = random.Random(seed)
    return PlaneGraph(gen.random_class_member(rng.randint(lo, hi), rng))
