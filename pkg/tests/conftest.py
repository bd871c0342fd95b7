import pytest

from gyrogroups import (
    FiniteGyrogroup,
    build_cyclic_gyrogroup,
    cyclic_group,
    dihedral_group,
    direct_product,
)


@pytest.fixture(scope="session")
def g3():
    return build_cyclic_gyrogroup(3)


@pytest.fixture(scope="session")
def g4():
    return build_cyclic_gyrogroup(4)


@pytest.fixture(scope="session")
def z8():
    return FiniteGyrogroup.from_group(cyclic_group(8))


@pytest.fixture(scope="session")
def z4xz2():
    return FiniteGyrogroup.from_group(direct_product(cyclic_group(4), cyclic_group(2)))


@pytest.fixture(scope="session")
def z2cubed():
    table = direct_product(direct_product(cyclic_group(2), cyclic_group(2)), cyclic_group(2))
    return FiniteGyrogroup.from_group(table)


@pytest.fixture(scope="session")
def dih8():
    return FiniteGyrogroup.from_group(dihedral_group(4))
