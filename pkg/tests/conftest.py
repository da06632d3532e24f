import functools
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from duocat.cli import resolve_input  # noqa: E402
from duocat.definition import load_definition  # noqa: E402


@functools.lru_cache(maxsize=None)
def _load(name):
    return load_definition(resolve_input(f"builtin:{name}"))


@pytest.fixture(scope="session")
def fixture():
    """``fixture("B2")`` returns the packaged definition; instances are shared across tests."""
    return _load


def fresh(name):
    """An uncached copy, for tests that declare atoms or mutate the instance."""
    return load_definition(resolve_input(f"builtin:{name}"))
