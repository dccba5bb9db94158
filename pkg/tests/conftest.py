import time

import pytest

import classgraphs as cg


@pytest.fixture(scope="session")
def catalog_entries():
    return cg.build_catalog()


@pytest.fixture(scope="session")
def catalog_groups(catalog_entries):
    """Every constructible catalog group, built once per session."""
    return {e.id: e.group() for e in catalog_entries if e.constructible}


@pytest.fixture(scope="session")
def catalog_decs(catalog_groups):
    return {name: cg.decompose(g) for name, g in catalog_groups.items()}


@pytest.fixture(scope="session")
def suite_with_elapsed():
    start = time.perf_counter()
    suite = cg.run_full_suite(n=4)
    return suite, time.perf_counter() - start


@pytest.fixture(scope="session")
def suite(suite_with_elapsed):
    return suite_with_elapsed[0]


@pytest.fixture(scope="session")
def suzuki_dec(catalog_decs):
    return catalog_decs["Sz8"]
