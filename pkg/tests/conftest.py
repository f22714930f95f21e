import pytest

from qqengine.series import ParamPoint, random_param_point


@pytest.fixture
def point():
    """A fixed generic point used by many hand-checked examples."""
    return ParamPoint("2/3", "5/7", (1, 11), genericity_bound=30)


@pytest.fixture(params=[3, 5, 11])
def seeded_point(request):
    return random_param_point(request.param, 1, 24)
