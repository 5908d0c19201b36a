import random

import pytest

from sgdecomp.field import make_field_q


@pytest.fixture(scope="session")
def f13():
    return make_field_q(13)


@pytest.fixture(scope="session")
def f25():
    return make_field_q(25)


@pytest.fixture(scope="session")
def f49():
    return make_field_q(49)


@pytest.fixture(scope="session")
def f121():
    return make_field_q(121)


@pytest.fixture()
def rng():
    return random.Random(20240817)
