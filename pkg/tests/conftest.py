import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from threecolor import (
    dodecahedron,
    pentagon_garden,
    pentagon_tower,
    perturbed_tower,
    shared_path_pentagons,
)


def build_corpus():
    """Every generated instance the suite verifies bounds on (n <= 40)."""
    corpus = [(f"tower{k}", pentagon_tower(k)) for k in range(1, 9)]
    corpus += [(f"garden{k}", pentagon_garden(k)) for k in (1, 2, 3)]
    corpus += [
        ("dodecahedron", dodecahedron()),
        ("shared_path", shared_path_pentagons()),
        ("perturbed3_s1", perturbed_tower(3, seed=1, ops=2)),
        ("perturbed4_s2", perturbed_tower(4, seed=2, ops=2)),
        ("perturbed4_s3", perturbed_tower(4, seed=3, ops=3)),
        ("perturbed5_s5", perturbed_tower(5, seed=5, ops=2)),
    ]
    return corpus


@pytest.fixture(scope="session")
def corpus():
    return build_corpus()


@pytest.fixture(scope="session")
def small_corpus(corpus):
    """Corpus instances small enough for exhaustive per-coloring checks."""
    return [(name, g) for name, g in corpus if g.n <= 25]
