from pathlib import Path

import pytest

from bisimple.bruck_reilly import BrContext, bicyclic_context
from bisimple.groups import (
    FiniteEndo,
    MatrixEndo,
    cyclic_group,
    free_abelian,
    identity_endo,
    multiplication_endo,
    symmetric_group,
)

SPECS = Path(__file__).resolve().parent.parent / "specs"

# S3 element indices (lex order of permutations of 0,1,2)
S3_A3 = [0, 3, 4]
S3_T12 = 2  # swaps points 0 and 1
S3_T13 = 5  # swaps points 0 and 2


def z4_doubling():
    G = cyclic_group(4)
    return BrContext(G, multiplication_endo(G, 2))


def z6_negation():
    G = cyclic_group(6)
    return BrContext(G, multiplication_endo(G, 5))


def z2_identity():
    G = cyclic_group(2)
    return BrContext(G, identity_endo(G))


def s3_identity():
    G, _ = symmetric_group(3)
    return BrContext(G, identity_endo(G))


def s3_sign():
    """Even permutations go to e, odd ones to the transposition (01)."""
    G, perms = symmetric_group(3)
    odd = [sum(p[i] > p[j] for i in range(3) for j in range(i + 1, 3)) % 2 for p in perms]
    return BrContext(G, FiniteEndo(G, [S3_T12 if o else 0 for o in odd]))


def z_times2():
    G = free_abelian(1)
    return BrContext(G, MatrixEndo(G, [[2]]))


def z_times2_pool(S):
    G = S.group
    return [G.trivial(), G.subgroup([(3,)]), G.whole()]


FINITE = {
    "bicyclic": bicyclic_context,
    "z4-doubling": z4_doubling,
    "z6-negation": z6_negation,
    "z2-identity": z2_identity,
    "s3-identity": s3_identity,
    "s3-sign": s3_sign,
}


@pytest.fixture(params=sorted(FINITE))
def finite_ctx(request):
    return FINITE[request.param]()


@pytest.fixture
def bicyclic():
    return bicyclic_context()


@pytest.fixture
def z4():
    return z4_doubling()


@pytest.fixture
def zz():
    return z_times2()


# criterion lines collected by the acceptance module
CRITERIA = []


def pytest_terminal_summary(terminalreporter):
    if CRITERIA:
        terminalreporter.section("acceptance criteria")
        for line in CRITERIA:
            terminalreporter.write_line(line)
