import itertools

import pytest

from oxtoby.core import FastGrowth
from oxtoby.ttype import EventuallyPeriodicSeq


@pytest.fixture
def fg3():
    return FastGrowth((3, 3, 3, 3))


@pytest.fixture
def fg343():
    return FastGrowth((3, 4, 3))


def canonical_sequences(max_prefix=4, max_period=4, alphabet="abc"):
    """Eventually periodic presentations up to relabelling of symbols.

    Two presentations with the same sequence, or with sequences differing by an
    injective relabelling, collapse to one representative.
    """
    horizon = max_prefix + 3 * max_period
    seen = {}
    for plen in range(max_prefix + 1):
        for pre in itertools.product(alphabet, repeat=plen):
            for per in range(1, max_period + 1):
                for tail in itertools.product(alphabet, repeat=per):
                    s = EventuallyPeriodicSeq(pre, tail)
                    labels = {}
                    key = tuple(labels.setdefault(x, len(labels)) for x in s.segment(0, horizon))
                    seen.setdefault(key, s)
    return list(seen.values())


ACCEPTANCE = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE:
        terminalreporter.write_line(line)
