import pytest

from hopfcleft.fields import FieldSpec
from hopfcleft.fixtures import cyclic_group_hopf, quantum_line, quantum_line_grading
from hopfcleft.lifting import GradedYDHopf, bosonize


@pytest.fixture(scope="session")
def rationals():
    return FieldSpec.rationals()


@pytest.fixture(scope="session")
def f3():
    return FieldSpec.prime_field(3)


@pytest.fixture(scope="session")
def f5():
    return FieldSpec.prime_field(5)


@pytest.fixture(scope="session")
def zeta4():
    return FieldSpec.cyclotomic(4)


@pytest.fixture(scope="session")
def kc2_q(rationals):
    return cyclic_group_hopf(rationals, 2)


@pytest.fixture(scope="session")
def kc2_f3(f3):
    return cyclic_group_hopf(f3, 2)


@pytest.fixture(scope="session")
def kc4_f5(f5):
    return cyclic_group_hopf(f5, 4)


@pytest.fixture(scope="session")
def kc4_zeta4(zeta4):
    return cyclic_group_hopf(zeta4, 4)


@pytest.fixture(scope="session")
def qline_f3(kc2_f3):
    return GradedYDHopf(quantum_line(kc2_f3), quantum_line_grading())


@pytest.fixture(scope="session")
def qline_f5(kc4_f5):
    return GradedYDHopf(quantum_line(kc4_f5), quantum_line_grading())


@pytest.fixture(scope="session")
def boson4(qline_f3):
    return bosonize(qline_f3)


@pytest.fixture(scope="session")
def boson8(qline_f5):
    return bosonize(qline_f5)
