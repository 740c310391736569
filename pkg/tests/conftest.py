import random

import pytest

from mcskit import alphabet


def random_instance(rng: random.Random, n_strings, max_len, alphabet_size, min_len=1):
    """One random string set drawn from a seeded generator."""
    chars = alphabet(alphabet_size)
    return [
        "".join(rng.choice(chars) for _ in range(rng.randint(min_len, max_len)))
        for _ in range(n_strings)
    ]


def pytest_runtest_logreport(report):
    """One pass/fail line per acceptance criterion."""
    if report.when != "call" or "test_acceptance" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1].removeprefix("test_")
    print(f"\n[acceptance] {name}: {report.outcome.upper()}", flush=True)


@pytest.fixture
def rng():
    return random.Random(99)
