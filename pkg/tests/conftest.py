import pytest

from cicodes import (
    ci_setup,
    extended_rs,
    field_new,
    hermitian_ci,
    parse,
    reed_muller_ci,
)


@pytest.fixture(scope="session")
def f2():
    return field_new(2, 1)


@pytest.fixture(scope="session")
def f3():
    return field_new(3, 1)


@pytest.fixture(scope="session")
def f4():
    return field_new(2, 2)


@pytest.fixture(scope="session")
def f5():
    return field_new(5, 1)


@pytest.fixture(scope="session")
def two_conic(f5):
    """4-point (2,2) complete intersection in P^2 over F_5, s = 1."""
    polys = [parse("x1^2 - x0^2", 2, f5), parse("x2^2 - x0^2", 2, f5)]
    return ci_setup(polys, 2, f5)


@pytest.fixture(scope="session")
def rm3(f3):
    """Reed-Muller CI q=3, m=2: all 9 affine points, s = 3."""
    polys, spec = reed_muller_ci(3, 2, field=f3)
    return ci_setup(polys, 2, f3)


@pytest.fixture(scope="session")
def rm2_m3(f2):
    """Reed-Muller CI q=2, m=3: all 8 affine points, s = 2."""
    polys, spec = reed_muller_ci(2, 3, field=f2)
    return ci_setup(polys, 3, f2)


@pytest.fixture(scope="session")
def rs5(f5):
    """Extended Reed-Solomon setup q=5, m=1, s = 3."""
    polys, spec = extended_rs(5, 1, field=f5)
    return ci_setup(polys, 1, f5)


@pytest.fixture(scope="session")
def rs7_m2():
    polys, spec = extended_rs(7, 2)
    return ci_setup(polys, 2, spec.field)


@pytest.fixture(scope="session")
def herm2():
    """Hermitian setup q=2 over F_4: 6 points, s = 2."""
    polys, spec = hermitian_ci(2)
    return ci_setup(polys, 2, spec.field)


@pytest.fixture(scope="session")
def corpus(two_conic, rm3, rm2_m3, rs5, rs7_m2, herm2):
    """The validated CI corpus: spans m = 1, 2, 3."""
    return {
        "two_conic": two_conic,
        "rm_q3_m2": rm3,
        "rm_q2_m3": rm2_m3,
        "rs_q5_m1": rs5,
        "rs_q7_m2": rs7_m2,
        "hermitian_q2": herm2,
    }
