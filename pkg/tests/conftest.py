import sys
from collections import defaultdict
from pathlib import Path

import hypothesis.core
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from monideal.borel import sbt_move_closure
from monideal.dfixed import DSequence, dfixed_closure
from monideal.ideal_core import MonomialIdeal

sys.path.insert(0, str(Path(__file__).parent))

DEFAULT_SEED = 20260101
# Module-level property tests; the acceptance suites raise this to 10^3 cases.
PROPERTY_CASES = 500

settings.register_profile(
    "ci",
    max_examples=PROPERTY_CASES,
    deadline=None,
    database=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much, HealthCheck.data_too_large],
)
settings.load_profile("ci")


def pytest_addoption(parser):
    parser.addoption("--seed", type=int, default=DEFAULT_SEED, help="seed for the randomized property suites")


def pytest_configure(config):
    hypothesis.core.global_force_seed = config.getoption("seed")
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion a test belongs to")


# ---------------------------------------------------------------------------
# one pass/fail line per acceptance criterion

_criteria: dict[int, dict] = defaultdict(lambda: {"title": "", "outcomes": []})


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or (report.when != "call" and report.passed):
        return
    number, title = marker.args
    entry = _criteria[number]
    entry["title"] = title
    if hasattr(report, "wasxfail"):
        status = "known-fail"
    else:
        status = report.outcome
    entry["outcomes"].append((item.name, status))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        entry = _criteria[number]
        bad = [name for name, status in entry["outcomes"] if status != "passed"]
        verdict = "PASS" if not bad else "FAIL"
        line = f"criterion {number}: {verdict}  {entry['title']}"
        if bad:
            line += "  [" + ", ".join(f"{n} ({s})" for n, s in entry["outcomes"] if s != "passed") + "]"
        terminalreporter.write_line(line)


# ---------------------------------------------------------------------------
# strategies shared by the property suites


def monomials(n: int, max_exp: int = 4, max_deg: int | None = None):
    m = st.tuples(*[st.integers(0, max_exp)] * n)
    if max_deg is not None:
        m = m.filter(lambda u: sum(u) <= max_deg)
    return m


@st.composite
def ideals(draw, n: int | None = None, max_gens: int = 4, max_exp: int = 4, max_deg: int = 6, nonzero=True):
    n = n if n is not None else draw(st.integers(1, 4))
    gens = draw(st.lists(monomials(n, max_exp, max_deg).filter(any), min_size=1 if nonzero else 0, max_size=max_gens))
    return MonomialIdeal(n, gens)


@st.composite
def strongly_stable_ideals(draw, n=None, max_gens=3, max_deg=5):
    base = draw(ideals(n, max_gens, max_deg, max_deg))
    return dfixed_closure(base.gens, DSequence.of(1), base.n)


@st.composite
def sbt_ideals(draw, n=None, max_gens=3, max_deg=6):
    base = draw(ideals(n, max_gens, max_deg, max_deg))
    return MonomialIdeal(base.n, sbt_move_closure(base.gens, base.n))


@st.composite
def prefix_artinian_ideals(draw, n=None, max_deg=6):
    """Ideals extended from an Artinian ideal of ``K[x_1..x_k]``; always of Borel type."""
    n = n if n is not None else draw(st.integers(1, 4))
    k = draw(st.integers(1, n))
    gens = [tuple(draw(st.integers(1, max_deg)) if i == j else 0 for i in range(n)) for j in range(k)]
    extra = draw(st.lists(monomials(k, max_deg, max_deg).filter(any), max_size=3))
    gens += [u + (0,) * (n - k) for u in extra]
    return MonomialIdeal(n, gens)


D_CHOICES = [DSequence.of(1, 2, 4), DSequence.of(1, 3), DSequence.of(1, 2, 4, 12), DSequence.of(1, 2)]


@st.composite
def dfixed_ideals(draw, n=None, max_gens=2, max_deg=6):
    base = draw(ideals(n, max_gens, max_deg, max_deg))
    return dfixed_closure(base.gens, draw(st.sampled_from(D_CHOICES)), base.n)


def borel_type_ideals(n=None):
    return st.one_of(strongly_stable_ideals(n), sbt_ideals(n), prefix_artinian_ideals(n), dfixed_ideals(n))
