"""Independent brute-force oracles shared by the test modules.

Nothing here calls into the library's enumeration or transform code paths;
each helper recomputes its answer straight from the definitions.
"""

import itertools
import random
from collections import Counter

import pytest


def brute_span(k, n, gens):
    """All Z_k-linear combinations of gens (coefficients range over all of Z_k^len(gens))."""
    words = set()
    for coeffs in itertools.product(range(k), repeat=len(gens)):
        w = [0] * n
        for c, g in zip(coeffs, gens):
            for i in range(n):
                w[i] = (w[i] + c * g[i]) % k
        words.add(tuple(w))
    if not gens:
        words.add((0,) * n)
    return words


def brute_dual(k, n, words):
    return {
        y for y in itertools.product(range(k), repeat=n)
        if all(sum(a * b for a, b in zip(x, y)) % k == 0 for x in words)
    }


def weight_counts(words):
    return Counter(sum(1 for v in w if v) for w in words)


def effective_weight_counts(word_lists):
    out = Counter()
    for rows in itertools.product(*word_lists):
        cols = sum(1 for col in zip(*rows) if any(col))
        out[cols] += 1
    return out


def brute_lattice_counts(k, words, D):
    """Points x of Z^n with |x|_1 <= D and x mod k in words, tallied by norm."""
    n = len(next(iter(words)))
    out = [0] * (D + 1)
    for x in itertools.product(range(-D, D + 1), repeat=n):
        norm = sum(abs(v) for v in x)
        if norm <= D and tuple(v % k for v in x) in words:
            out[norm] += 1
    return out


@pytest.fixture
def rng():
    return random.Random(20241015)


# acceptance reporting: one PASS/FAIL line per criterion in the terminal summary

_ACCEPTANCE: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _ACCEPTANCE[number] = (title, "PASS" if report.passed else "FAIL")


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        title, status = _ACCEPTANCE[number]
        terminalreporter.write_line(f"[{status}] criterion {number}: {title}")
