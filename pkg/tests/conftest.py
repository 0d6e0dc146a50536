import pytest

from gwweyl.root_system import build_root_system


@pytest.fixture(scope="session")
def c2():
    return build_root_system("C2")


@pytest.fixture(scope="session")
def c3():
    return build_root_system("C3")
