import pytest

from padic_tate.field import make_field


@pytest.fixture(scope="session")
def Q5():
    return make_field(5)


@pytest.fixture(scope="session")
def Q2():
    return make_field(2)


@pytest.fixture(scope="session")
def Q3():
    return make_field(3)


@pytest.fixture(scope="session")
def E54():
    # v(pi) = 1/4 = 1/(p-1), the boundary radius field for p = 5
    return make_field(5, "eisenstein", e=4, c=-1)


@pytest.fixture(scope="session")
def U22():
    return make_field(2, "unramified", poly=[1, 1, 1])
