"""Each demo script runs to completion and tells its story."""

import io
import runpy
from contextlib import redirect_stdout
from pathlib import Path

import pytest

DEMOS = Path(__file__).resolve().parents[1] / "demos"


def _run(name):
    out = io.StringIO()
    with redirect_stdout(out):
        runpy.run_path(str(DEMOS / name), run_name="__main__")
    return out.getvalue()


def test_triviality_demo():
    out = _run("triviality.py")
    assert "candidates under both:           none" in out
    assert "one fresh element carries the conditional" in out


def test_null_conditioning_demo():
    out = _run("null_conditioning.py")
    assert "rational block rule fails" in out
    assert "P([x]{a}) = 1/2" in out
    assert "standard part 1/2" in out


def test_derivations_demo():
    out = _run("derivations.py")
    assert out.count(": ok (") == 23
    assert "refuted over atoms" in out
    assert "no counterexample: [x]~y <-> ~[x]y" in out


@pytest.mark.parametrize("name", ["triviality.py", "null_conditioning.py",
                                  "derivations.py"])
def test_demos_have_docstrings(name):
    text = (DEMOS / name).read_text()
    assert text.startswith('"""')
