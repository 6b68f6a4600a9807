import os
import random

import pytest

from chirotrop.io import bundled_classes, bundled_rays

from . import oracles

EXTENDED = os.environ.get("CHIROTROP_EXTENDED") == "1"


def pytest_collection_modifyitems(config, items):
    if EXTENDED:
        return
    skip = pytest.mark.skip(reason="extended tier; set CHIROTROP_EXTENDED=1")
    for item in items:
        if "extended" in item.keywords:
            item.add_marker(skip)


@pytest.fixture(scope="session")
def rays36():
    return bundled_rays(3, 6)


@pytest.fixture(scope="session")
def rays37():
    return bundled_rays(3, 7)


@pytest.fixture(scope="session")
def classes36():
    return bundled_classes(3, 6)


@pytest.fixture(scope="session")
def classes37():
    return bundled_classes(3, 7)


def random_chirotope_dict(k, n, rng, box=6):
    """Signs of a random generic integer configuration (realizable, hence valid)."""
    while True:
        pts = [[rng.randint(-box, box) for _ in range(k)] for _ in range(n)]
        chi = oracles.chirotope_of_points(pts, k)
        if chi is not None:
            return chi


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    if not test_acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in test_acceptance.RESULTS:
        terminalreporter.write_line(line)
    if not EXTENDED:
        terminalreporter.write_line("[SKIP] criterion 10: extended tier (CHIROTROP_EXTENDED=1 and CHIROTROP_RAYS_3_8)")
