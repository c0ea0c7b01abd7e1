import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from gnknot.census import default_panel
from gnknot.finite_groups import named
from gnknot.knots import builtin_table, lookup


@pytest.fixture(scope="session")
def panel():
    return default_panel()


@pytest.fixture(scope="session")
def knots():
    return {e.name: e.diagram for e in builtin_table()}


@pytest.fixture(scope="session")
def trefoil():
    return lookup("trefoil").diagram


@pytest.fixture(scope="session")
def figure8():
    return lookup("figure-8").diagram


@pytest.fixture(scope="session")
def s3():
    return named("S3")
