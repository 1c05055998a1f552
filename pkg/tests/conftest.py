from pathlib import Path

import pytest

from ccv import QQ, ProjectivePoint, load_variety

VARIETIES = Path(__file__).resolve().parent.parent / "varieties"


def qpt(*coords, field=QQ):
    return ProjectivePoint([field(c) for c in coords], field)


@pytest.fixture
def quadric():
    return load_variety(VARIETIES / "quadric_p3.json")


@pytest.fixture
def quadric3():
    return load_variety(VARIETIES / "quadric3_p4.json")


@pytest.fixture
def fermat4():
    return load_variety(VARIETIES / "fermat_cubic_p4.json")


@pytest.fixture
def fermat5():
    return load_variety(VARIETIES / "fermat_cubic_p5.json")


@pytest.fixture
def two_quadrics():
    return load_variety(VARIETIES / "two_quadrics_p6.json")


@pytest.fixture
def g14():
    return load_variety(VARIETIES / "g14_p9.json")
