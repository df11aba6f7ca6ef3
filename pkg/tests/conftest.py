import pytest

from shortloc.presets import preset


@pytest.fixture(scope="session")
def L2():
    return preset("L", e=2)


@pytest.fixture(scope="session")
def L3():
    return preset("L", e=3)


@pytest.fixture(scope="session")
def qext():
    return preset("qexterior")


@pytest.fixture(scope="session")
def lam0():
    return preset("lambda_c", c=0)


@pytest.fixture(scope="session")
def lam1():
    return preset("lambda_c", c=1)


@pytest.fixture(scope="session")
def conca32():
    return preset("ex15_1", e=3, a=2)
