import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from hodgecalc.arrangement import Arrangement, builtin_family


def corpus() -> list[tuple[str, Arrangement]]:
    """The standing test corpus of small arrangements."""
    return [
        ("boolean(1)", builtin_family("boolean", (1,))),
        ("boolean(2)", builtin_family("boolean", (2,))),
        ("boolean(3)", builtin_family("boolean", (3,))),
        ("concurrent_lines(2)", builtin_family("concurrent_lines", (2,))),
        ("concurrent_lines(3)", builtin_family("concurrent_lines", (3,))),
        ("concurrent_lines(4)", builtin_family("concurrent_lines", (4,))),
        ("braid(3)", builtin_family("braid", (3,))),
        ("generic(2,4)", builtin_family("generic", (2, 4))),
        ("generic(3,4)", builtin_family("generic", (3, 4))),
    ]


@pytest.fixture(params=corpus(), ids=[name for name, _ in corpus()])
def corpus_arrangement(request) -> Arrangement:
    return request.param[1]
