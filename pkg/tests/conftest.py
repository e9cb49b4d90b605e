from __future__ import annotations

import pytest

from pathmetric import build_paley_system, make_prime_field, petersen_fixture


@pytest.fixture(scope="session")
def pf29():
    return make_prime_field(29)


@pytest.fixture(scope="session")
def pf53():
    return make_prime_field(53)


@pytest.fixture(scope="session")
def petersen():
    return petersen_fixture()


@pytest.fixture(scope="session")
def paley29(pf29):
    return build_paley_system(pf29)
