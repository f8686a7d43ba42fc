import pytest

from mbmcheck.builders import catalog_instance, catalog_names, from_bimonoid, quantum_line


@pytest.fixture(scope="session")
def catalog():
    return {name: catalog_instance(name) for name in catalog_names()}


@pytest.fixture(scope="session")
def qline():
    return from_bimonoid(quantum_line())
