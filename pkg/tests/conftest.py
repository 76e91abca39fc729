import pytest

from conjucyclic import ConjucyclicCode, build_tower
from conjucyclic.refdata import QUATERNARY_N11, TERNARY_N11, decode_vector


@pytest.fixture(scope="session")
def f9():
    return build_tower(3, 1)


@pytest.fixture(scope="session")
def f16():
    return build_tower(2, 2)


@pytest.fixture(scope="session")
def ternary_code(f9):
    return ConjucyclicCode(f9, 11, decode_vector(f9, TERNARY_N11["g"]))


@pytest.fixture(scope="session")
def quaternary_code(f16):
    return ConjucyclicCode(f16, 11, decode_vector(f16, QUATERNARY_N11["g"]))
