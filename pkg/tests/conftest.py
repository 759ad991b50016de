import pytest

# (k, m-k) pairs with 2 <= k <= m-k <= 6
SWEEP = [(k, f) for k in range(2, 7) for f in range(k, 7)]


@pytest.fixture(params=SWEEP, ids=lambda kf: f"k{kf[0]}f{kf[1]}")
def kf(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    try:
        from tests import test_acceptance
    except ImportError:
        import test_acceptance
    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(test_acceptance.RESULTS):
            terminalreporter.write_line(test_acceptance.RESULTS[n])
