import pytest

from powemb.lpengine import Grid, make_dyadic


@pytest.fixture(scope="session")
def grid1d():
    return Grid(1, 16.0, 2 ** 13)


@pytest.fixture(scope="session")
def grid1d_fine():
    return Grid(1, 16.0, 2 ** 14)


@pytest.fixture(scope="session")
def grid2d():
    return Grid(2, 8.0, 2 ** 7)


@pytest.fixture(scope="session")
def sys1d(grid1d):
    return make_dyadic(grid1d)


@pytest.fixture(scope="session")
def sys1d_fine(grid1d_fine):
    return make_dyadic(grid1d_fine)


@pytest.fixture(scope="session")
def sys2d(grid2d):
    return make_dyadic(grid2d)
