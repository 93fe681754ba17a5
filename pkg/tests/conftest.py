import itertools

import pytest

from eslroots import Mat2, PrimeField

SMALL_PRIMES = (2, 3, 5, 7, 11, 13)


def all_matrices(p):
    F = PrimeField(p)
    for e in itertools.product(range(p), repeat=4):
        yield Mat2(*e, F)


def sl2(p):
    return [X for X in all_matrices(p) if X.det == 1]


def mat(text, domain):
    return Mat2.parse(text, domain)


@pytest.fixture
def F3():
    return PrimeField(3)


@pytest.fixture
def F5():
    return PrimeField(5)


@pytest.fixture
def F11():
    return PrimeField(11)


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed"):
        for rep in terminalreporter.stats.get(outcome, []):
            for key, value in getattr(rep, "user_properties", ()):
                if key == "criterion":
                    lines.append(value)
    if lines:
        terminalreporter.section("acceptance")
        for number, label, ok in sorted(lines):
            terminalreporter.line(f"{'PASS' if ok else 'FAIL'} criterion {number}: {label}")
