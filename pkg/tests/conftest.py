import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from profiles import NAMED, named  # noqa: E402


@pytest.fixture(params=sorted(NAMED))
def any_named(request):
    return named(request.param)


@pytest.fixture
def circle():
    return named("circle")


@pytest.fixture
def example(request):
    return named(request.param)
