import random
import sys

import pytest

from matchcx import complexes


@pytest.fixture
def rng():
    return random.Random(20240611)


def random_complex(rng: random.Random, n_vertices: int = 7, n_facets: int = 6) -> complexes.SimplicialComplex:
    facets = []
    for _ in range(rng.randint(1, n_facets)):
        size = rng.randint(1, min(4, n_vertices))
        facets.append(rng.sample(range(n_vertices), size))
    return complexes.SimplicialComplex.from_facets(facets)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(module.RESULTS):
        terminalreporter.write_line(module.RESULTS[n])
