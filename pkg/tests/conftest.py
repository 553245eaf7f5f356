import pytest

from symbalg import GF, FunctionField


@pytest.fixture(scope="session")
def F2():
    return GF(2)


@pytest.fixture(scope="session")
def F3():
    return GF(3)


@pytest.fixture(scope="session")
def F4():
    return GF(2, (1, 1, 1))


@pytest.fixture(scope="session")
def F9():
    return GF(3, (1, 0, 1))  # z^2 + 1 is irreducible over F_3


@pytest.fixture(scope="session")
def L2(F2):
    return FunctionField(F2, "t", local=True)


@pytest.fixture(scope="session")
def L4(F4):
    return FunctionField(F4, "t", local=True)


@pytest.fixture(scope="session")
def R3(F3):
    return FunctionField(F3, "t", local=False)
