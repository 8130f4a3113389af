import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from semigraphs import (  # noqa: E402
    Semigroup,
    make_brandt,
    make_cyclic_group,
    make_direct_product,
    make_monogenic,
    make_zn_mult,
    signs_semigroup,
)
from oracles import permutation_group_table, transformation_semigroup_table  # noqa: E402


@pytest.fixture
def m32():
    return make_monogenic(3, 2)


@pytest.fixture
def m26():
    return make_monogenic(2, 6)


@pytest.fixture
def z4():
    return make_zn_mult(4)


@pytest.fixture
def b2():
    return make_brandt(2)


@pytest.fixture
def signs():
    return signs_semigroup()


def klein():
    return make_direct_product(make_cyclic_group(2), make_cyclic_group(2))


def s3():
    return Semigroup(permutation_group_table([(1, 0, 2), (1, 2, 0)]))


def q8():
    # quaternion group as permutations of its own 8 elements (right regular action)
    i = (2, 3, 1, 0, 6, 7, 5, 4)
    j = (4, 5, 7, 6, 1, 0, 2, 3)
    return Semigroup(permutation_group_table([i, j]))


def d4():
    return Semigroup(permutation_group_table([(1, 2, 3, 0), (3, 2, 1, 0)]))


def full_transformations(k):
    import itertools

    return Semigroup(transformation_semigroup_table(list(itertools.product(range(k), repeat=k))))


# semigroups outside the named families, used as extra cross-check inputs
EXTRA = {
    "S3": s3,
    "Q8": q8,
    "D4": d4,
    "T2": lambda: full_transformations(2),
    "T3": lambda: full_transformations(3),
}



# acceptance(number, title) marker -> one PASS/FAIL line per criterion in the summary
_CRITERIA: dict = {}
_RESULTS: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): exit criterion of the project")


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("acceptance")
        if m is not None:
            _CRITERIA[item.nodeid] = m.args


def pytest_runtest_logreport(report):
    key = _CRITERIA.get(report.nodeid)
    if key is None or (report.when != "call" and report.passed):
        return
    _RESULTS[key] = _RESULTS.get(key, True) and report.passed


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for (number, title), ok in sorted(_RESULTS.items()):
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}")
