import os

import numpy as np
import pytest
from hypothesis import settings, strategies as st

from hnt.groups import AutElem
from hnt.hamming import Code, GraphParams

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def pytest_addoption(parser):
    parser.addoption("--seed", type=int, default=0, help="seed for randomised checks")
    parser.addoption("--skip-stretch", action="store_true",
                     help="skip the exhaustive H(3,5) search")


@pytest.fixture
def seed(request):
    return request.config.getoption("--seed")


@pytest.fixture
def rng(seed):
    return np.random.default_rng(seed)


@pytest.fixture
def skip_stretch(request):
    return request.config.getoption("--skip-stretch") or os.environ.get("HNT_SKIP_STRETCH") == "1"


# --- strategies ---------------------------------------------------------------

small_params = st.tuples(st.integers(1, 4), st.integers(2, 4)).map(lambda t: GraphParams(*t))


@st.composite
def vertices(draw, params):
    return tuple(draw(st.lists(st.integers(0, params.q - 1), min_size=params.m, max_size=params.m)))


@st.composite
def perms(draw, n):
    return tuple(draw(st.permutations(range(n))))


@st.composite
def aut_elems(draw, params):
    base = tuple(draw(perms(params.q)) for _ in range(params.m))
    return AutElem(base, draw(perms(params.m)))


@st.composite
def codes(draw, params, max_size=6):
    words = draw(st.sets(vertices(params), min_size=1, max_size=max_size))
    return Code(params, frozenset(words))


# --- acceptance summary ---------------------------------------------------------

_ACCEPTANCE: list[tuple[str, str, float]] = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    label = getattr(item.function, "criterion", None)
    if label is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        status = {"passed": "PASS", "failed": "FAIL", "skipped": "SKIPPED"}[rep.outcome]
        _ACCEPTANCE.append((label, status, rep.duration))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label, status, secs in sorted(_ACCEPTANCE):
        terminalreporter.write_line(f"{status:7s} {label}  ({secs:.2f}s)")
