import pytest

from granrough.io import data_path, load_map, load_rys


@pytest.fixture(scope="session")
def x1_tol():
    return load_rys(data_path("x1-tol.json"))


@pytest.fixture(scope="session")
def x1_eq():
    return load_rys(data_path("x1-eq.json"))


@pytest.fixture(scope="session")
def x2_eq():
    return load_rys(data_path("x2-eq.json"))


@pytest.fixture(scope="session")
def maps(x1_tol, x2_eq):
    return {m: load_map(data_path(f"{m}.json"), x1_tol, x2_eq) for m in ("phi", "sigma", "tau")}


@pytest.fixture(scope="session")
def sigma_classical(x1_eq, x2_eq):
    return load_map(data_path("sigma-classical.json"), x1_eq, x2_eq)
