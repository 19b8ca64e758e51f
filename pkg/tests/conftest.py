import random
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings

from cubicpair import CubicHomogeneousMap, Polynomial, PolynomialMap, get_fixture

settings.register_profile(
    "default", deadline=None, max_examples=40, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@pytest.fixture(scope="session")
def druz():
    return get_fixture("druzkowski15")


@pytest.fixture(scope="session")
def essen():
    return get_fixture("essen4")


def cubic_monomials(n):
    out = []
    for i in range(n):
        for j in range(i, n):
            for k in range(j, n):
                e = [0] * n
                for t in (i, j, k):
                    e[t] += 1
                out.append(tuple(e))
    return out


def random_cubic_map(rng: random.Random, n: int, monomials: int) -> CubicHomogeneousMap:
    """Cubic-homogeneous map on Q^n with at most `monomials` cubic terms, small rational coefficients."""
    pool = [(comp, e) for comp in range(n) for e in cubic_monomials(n)]
    picked = rng.sample(pool, min(monomials, len(pool)))
    comps = [[] for _ in range(n)]
    for comp, e in picked:
        c = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.choice([1, 1, 2, 3]))
        comps[comp].append((e, c))
    return CubicHomogeneousMap(PolynomialMap(n, [Polynomial(n, t) for t in comps]))


# (number, title, passed, seconds, note) for every acceptance criterion that ran
ACCEPTANCE = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num, title, ok, secs, note in sorted(ACCEPTANCE):
        extra = f"  ({note})" if note else ""
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {num:>2}. {title}  {secs:.2f}s{extra}")
