import itertools
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from conegen.ratcore import rref

ACCEPTANCE_RESULTS: list[tuple[str, bool, str]] = []


def record(criterion: str, passed: bool, detail: str) -> None:
    line = f"[{'PASS' if passed else 'FAIL'}] {criterion}: {detail}"
    print(line)
    ACCEPTANCE_RESULTS.append((criterion, passed, detail))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for criterion, passed, detail in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] {criterion}: {detail}")


def caratheodory_member(c, vectors) -> bool:
    """Membership by enumeration, independent of the simplex code.

    ``c`` is in the cone iff it is a nonnegative combination of some linearly
    independent subset of the generators, so solve every such square-free
    system exactly and look for a nonnegative solution.
    """
    c = tuple(Fraction(x) for x in c)
    if all(x == 0 for x in c):
        return True
    n = len(c)
    for size in range(1, min(n, len(vectors)) + 1):
        for idx in itertools.combinations(range(len(vectors)), size):
            aug = [[vectors[j][i] for j in idx] + [c[i]] for i in range(n)]
            red, piv = rref(aug)
            if size in piv:  # inconsistent
                continue
            if piv != list(range(size)):  # dependent columns; a smaller subset covers it
                continue
            if all(red[r][size] >= 0 for r in range(size)):
                return True
    return False


def small_int_vectors(n, min_size=0, max_size=6, lo=-3, hi=3):
    return st.lists(
        st.tuples(*[st.integers(lo, hi)] * n).map(lambda t: tuple(Fraction(x) for x in t)),
        min_size=min_size,
        max_size=max_size,
    )


@pytest.fixture
def half_plane():
    from conegen import GeneratorSet

    return GeneratorSet.of([(1, 0), (-1, 0), (0, 1)])
