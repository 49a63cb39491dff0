import pytest

from conelines.lattices import SexticType, build_lattice

TYPE_KEYS = ("4|0", "3|0", "2|0", "1|0", "0|0", "1|1", "|||", "0|1", "0|2", "0|3", "0|4")

HANDLE_KEYS = ("4|0", "3|0", "2|0", "1|0", "1|1")


@pytest.fixture(scope="session")
def e8():
    return build_lattice(SexticType(4, 0))


@pytest.fixture(scope="session")
def d6():
    return build_lattice(SexticType(2, 0))


@pytest.fixture(scope="session")
def d4_band():
    return build_lattice(SexticType.from_key("|||"))


def lattice_for(key: str):
    return build_lattice(SexticType.from_key(key))
