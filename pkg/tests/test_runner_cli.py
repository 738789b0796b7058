"""Run orchestration, output files, config precedence and CLI exit codes."""

import json

import numpy as np
import pytest

from wenobench import ConfigurationError
from wenobench import cli
from wenobench import grid as gr
from wenobench.problems import get_problem
from wenobench.runner import (
    RunConfig,
    compare,
    convergence_suite,
    read_field_csv,
    run,
    write_field,
)


def scalar_field(values):
    g = gr.Grid(0.0, 1.0, len(values) - 1)
    f = gr.make_field(g, gr.BoundarySpec(gr.zero_gradient(), gr.zero_gradient()))
    f.interior[:] = values
    return f


def test_write_field_scalar_roundtrip(tmp_path):
    f = scalar_field([0.1, -1.0 / 3.0, 7.25])
    path = tmp_path / "sol.csv"
    written = write_field(f, path, metadata={"schema_version": 1})
    assert len(written) == 2
    text = path.read_text().splitlines()
    assert text[0] == "x,u"
    assert len(text) == 4  # header + 3 nodes
    cols = read_field_csv(path)
    np.testing.assert_array_equal(cols["u"], f.interior)  # bit-exact round trip
    np.testing.assert_array_equal(cols["x"], f.grid.x)
    meta = json.loads(path.with_suffix(".meta.json").read_text())
    assert meta["schema_version"] == 1


def test_config_hash_changes_with_any_field():
    base = RunConfig(problem="sod")
    assert base.config_hash() == RunConfig(problem="sod").config_hash()
    assert base.config_hash() != RunConfig(problem="sod", n=100).config_hash()
    assert base.config_hash() != RunConfig(problem="sod", cfl=0.4).config_hash()


def test_run_sod_writes_outputs_and_errors(tmp_path):
    config = RunConfig(problem="sod", scheme="theta6", n=60, t_final=0.4, out_dir=str(tmp_path))
    report = run(config)
    assert report.steps > 0 and report.wall_time > 0
    assert report.errors is not None and report.errors["l1_rho"] > 0
    assert len(report.files) == 2
    cols = read_field_csv(report.files[0])
    assert list(cols) == ["x", "rho", "u", "p", "E"]
    assert cols["x"].size == 61
    assert np.all(cols["rho"] > 0) and np.all(cols["p"] > 0)
    meta = json.loads((tmp_path / "sod-theta6-n60.meta.json").read_text())
    assert meta["alpha_r"] == 50.0 and meta["n"] == 60
    # mass is conserved to roundoff on this zero-gradient run (waves have
    # not reached the boundary by t=0.4)
    assert report.totals_initial[0] == pytest.approx(report.totals_final[0], rel=1e-12)


def test_run_determinism(tmp_path):
    config = RunConfig(
        problem="sin", scheme="theta6", n=40, t_final=0.2, out_dir=str(tmp_path / "a")
    )
    r1 = run(config)
    r2 = run(RunConfig(**{**config.__dict__, "out_dir": str(tmp_path / "b")}))
    a = (tmp_path / "a" / "sin-theta6-n40.csv").read_text()
    b = (tmp_path / "b" / "sin-theta6-n40.csv").read_text()
    assert a == b
    assert r1.steps == r2.steps


def test_run_rejects_bad_configs(tmp_path):
    with pytest.raises(ConfigurationError):
        run(RunConfig(problem="nope", out_dir=str(tmp_path)))
    with pytest.raises(ConfigurationError):
        run(RunConfig(problem="sod", ny=50, out_dir=str(tmp_path)))  # 1D problem
    with pytest.raises(ConfigurationError):
        run(RunConfig(problem="sod", cfl=0.5, dt_power=2.0, out_dir=str(tmp_path)))


def test_alpha_r_precedence(tmp_path):
    # problem default (lax: 10) unless overridden
    rep = run(RunConfig(problem="lax", n=60, t_final=0.1, out_dir=str(tmp_path)))
    meta = json.loads((tmp_path / "lax-theta6-n60.meta.json").read_text())
    assert meta["alpha_r"] == 10.0
    rep = run(
        RunConfig(problem="lax", n=60, t_final=0.1, alpha_r=25.0, out_dir=str(tmp_path))
    )
    meta = json.loads((tmp_path / "lax-theta6-n60.meta.json").read_text())
    assert meta["alpha_r"] == 25.0


def test_convergence_suite_rows(tmp_path):
    rows = convergence_suite("sin", "theta6", grids=(20, 40), out_dir=str(tmp_path))
    assert rows[0].order_l1 is None and rows[1].order_l1 is not None
    assert rows[1].order_l1 > 4.0
    assert (tmp_path / "converge-sin-theta6.csv").exists()
    assert (tmp_path / "converge-sin-theta6.txt").exists()


def test_convergence_suite_needs_exact_reference():
    with pytest.raises(ConfigurationError):
        convergence_suite("burgers-sin", "theta6", grids=(20,))


def test_compare_combined_csv(tmp_path):
    config = RunConfig(
        problem="sin",
        scheme="theta6",
        n=20,
        t_final=0.1,
        compare_schemes=("theta6", "js"),
        out_dir=str(tmp_path),
    )
    result = compare(config)
    assert set(result["reports"]) == {"theta6", "js"}
    cols = read_field_csv(result["files"][0])
    assert list(cols) == ["x", "theta6", "js"]
    assert cols["x"].size == 20


# ---------------------------------------------------------------------------
# CLI


def test_default_out_dir_env(monkeypatch):
    from wenobench.runner import default_out_dir

    monkeypatch.delenv("WENOBENCH_OUT", raising=False)
    assert default_out_dir() == "runs"
    monkeypatch.setenv("WENOBENCH_OUT", "/tmp/elsewhere")
    assert default_out_dir() == "/tmp/elsewhere"


def test_cli_list(capsys):
    assert cli.main(["list"]) == 0
    out = capsys.readouterr().out
    assert "theta6" in out and "sod" in out and "dmr" in out


def test_cli_unknown_problem_exit_2(capsys):
    assert cli.main(["run", "--problem", "sods"]) == 2
    err = capsys.readouterr().err
    assert "valid problems" in err and "shu-osher" in err


def test_cli_unknown_scheme_exit_2(capsys):
    assert cli.main(["run", "--problem", "sod", "--scheme", "weno9"]) == 2
    assert "valid schemes" in capsys.readouterr().err


def test_cli_dimension_mismatch_exit_2(capsys):
    assert cli.main(["run", "--problem", "sod", "--ny", "50"]) == 2


def test_cli_run_smoke(tmp_path, capsys):
    code = cli.main(
        ["run", "--problem", "sin", "--scheme", "theta6", "--n", "20",
         "--t-final", "0.1", "--out", str(tmp_path)]
    )
    assert code == 0
    out = capsys.readouterr().out
    assert "steps=" in out and "wrote" in out
    assert (tmp_path / "sin-theta6-n20.csv").exists()


def test_cli_numerical_abort_exit_3(tmp_path, capsys):
    # dt = dx**0.5 >> dx makes the advection run linearly unstable
    code = cli.main(
        ["run", "--problem", "sin", "--n", "40", "--dt-power", "0.5",
         "--t-final", "50", "--out", str(tmp_path)]
    )
    assert code == 3
    assert "numerical abort" in capsys.readouterr().err


def test_cli_config_file_and_flag_precedence(tmp_path, capsys):
    cfg_file = tmp_path / "run.cfg"
    cfg_file.write_text(
        "problem = lax\nscheme = theta6\nn = 60\nt_final = 0.1\n"
        f"alpha_r = 10\nout = {tmp_path}\n"
    )
    assert cli.main(["run", "--config", str(cfg_file), "--alpha-r", "50"]) == 0
    meta = json.loads((tmp_path / "lax-theta6-n60.meta.json").read_text())
    assert meta["alpha_r"] == 50.0  # the flag wins over the file


def test_cli_config_file_unknown_key(tmp_path, capsys):
    cfg_file = tmp_path / "run.cfg"
    cfg_file.write_text("problem = sod\nwavelets = 3\n")
    assert cli.main(["run", "--config", str(cfg_file)]) == 2
    assert "unknown key" in capsys.readouterr().err


def test_cli_converge_table(tmp_path, capsys):
    code = cli.main(
        ["converge", "--problem", "sin", "--scheme", "theta6",
         "--grids", "20,40", "--out", str(tmp_path)]
    )
    assert code == 0
    out = capsys.readouterr().out
    assert "L1 error" in out and "sin / theta6" in out


def test_cli_critical_sign_config_key(tmp_path):
    cfg_file = tmp_path / "run.cfg"
    cfg_file.write_text(
        f"problem = critical\nn = 50\nt_final = 0.1\ncritical_sign = positive\nout = {tmp_path}\n"
    )
    assert cli.main(["run", "--config", str(cfg_file)]) == 0
    cols = read_field_csv(tmp_path / "critical-theta6-n50.csv")
    # the flipped profile starts with the positive lobe on x > 0
    spec = get_problem("critical")
    x = spec.grid(n=50).x
    assert cols["u"][np.argmin(np.abs(x - 0.45))] > 0.1
