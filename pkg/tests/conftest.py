import random
from dataclasses import dataclass

import pytest

from proxitri.delaunay import SiteSet, TriMesh, triangulate
from proxitri.generate import generate_sites
from proxitri.voronoi import VoronoiDiagram, voronoi_diagram


def corpus_params(seed: int) -> tuple[int, str]:
    """Deterministic (n, distribution) for one corpus seed."""
    rng = random.Random(10_000 + seed)
    n = rng.randint(4, 50)
    distribution = "uniform" if seed % 2 == 0 else "clustered"
    return n, distribution


@dataclass
class CorpusEntry:
    seed: int
    sites: SiteSet
    mesh: TriMesh
    diagram: VoronoiDiagram


CORPUS_SIZE = 100


@pytest.fixture(scope="session")
def corpus() -> list[CorpusEntry]:
    """The 100 seeded random site sets shared by the acceptance criteria."""
    entries = []
    for seed in range(CORPUS_SIZE):
        n, distribution = corpus_params(seed)
        sites = SiteSet(tuple(generate_sites(n, seed, distribution)))
        mesh = triangulate(sites)
        diagram = voronoi_diagram(sites)
        entries.append(CorpusEntry(seed=seed, sites=sites, mesh=mesh, diagram=diagram))
    return entries


@pytest.fixture()
def fan_sites() -> SiteSet:
    return SiteSet.of([(0, 0), (4, 0), (0, 4), (1, 1)])


@pytest.fixture()
def fan_mesh(fan_sites) -> TriMesh:
    return triangulate(fan_sites)
