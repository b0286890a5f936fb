import pytest

import gkcodes as gk


@pytest.fixture(scope="session")
def params2():
    return gk.params(2)


@pytest.fixture(scope="session")
def params3():
    return gk.params(3)


@pytest.fixture(scope="session")
def oracle2(params2):
    return gk.Oracle(params2)


@pytest.fixture(scope="session")
def oracle3(params3):
    return gk.Oracle(params3)


@pytest.fixture(scope="session")
def points2(params2):
    return gk.enumerate_points(params2)


@pytest.fixture(scope="session")
def points3(params3):
    return gk.enumerate_points(params3)
