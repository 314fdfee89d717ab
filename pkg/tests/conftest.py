import pytest

from gadic import BasisSpec, GadicSequence, PartitionSpec


@pytest.fixture
def binary():
    return GadicSequence(period=[2])


@pytest.fixture
def mixed23():
    return GadicSequence(period=[2, 3])


@pytest.fixture
def pairs_partition():
    return PartitionSpec(h=2, period_colors=[0, 0, 1, 1])


@pytest.fixture
def binary_pairs(binary, pairs_partition):
    return BasisSpec(seq=binary, partition=pairs_partition)


@pytest.fixture
def mixed23_pairs(mixed23, pairs_partition):
    return BasisSpec(seq=mixed23, partition=pairs_partition)
