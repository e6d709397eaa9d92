import runpy
from pathlib import Path

import pytest

DEMOS = Path(__file__).resolve().parent.parent / "demos"


@pytest.mark.parametrize("name", ["01_build_and_rank.py", "02_branch_point_reduction.py", "03_intersection.py"])
def test_demo_runs(name, capsys):
    runpy.run_path(str(DEMOS / name), run_name="__main__")
    assert capsys.readouterr().out


def test_sweep_demo_small(capsys, monkeypatch):
    monkeypatch.setattr("sys.argv", ["04_exhaustive_sweep.py"])
    runpy.run_path(str(DEMOS / "04_exhaustive_sweep.py"), run_name="__main__")
    assert "bound exceeded: 0" in capsys.readouterr().out
