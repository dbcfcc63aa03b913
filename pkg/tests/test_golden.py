from pathlib import Path

import pytest

from cdspile.verification import golden_cases

GOLDEN = Path(__file__).parent / "golden"


@pytest.mark.parametrize("name, render", sorted(golden_cases().items()))
def test_worked_example_renders_exactly(name, render):
    assert render() == (GOLDEN / name).read_text()
