import json
import math

import pytest

from wedgent.cli import main
from wedgent.stateio import dump_state
from wedgent.states import bell, ghz, make_state


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def bell_file(tmp_path):
    p = tmp_path / "bell.json"
    dump_state(bell(), p)
    return p


def test_measure_file_table(capsys, bell_file):
    code, out, _ = run(capsys, "measure", str(bell_file))
    assert code == 0
    assert "two_qubit_concurrence" in out
    assert "bipartite" in out


def test_measure_file_json(capsys, bell_file):
    code, out, _ = run(capsys, "measure", str(bell_file), "--format", "json")
    rep = json.loads(out)
    assert code == 0
    assert rep["measures"]["two_qubit_concurrence"] == pytest.approx(1.0, abs=1e-12)
    assert rep["measures"]["bipartite"] == pytest.approx(1.0, abs=1e-12)
    assert rep["primary"] == "bipartite"
    assert rep["oracle"]["discrepancy"] == abs(rep["measures"]["bipartite"] - rep["oracle"]["value"])
    assert rep["config"] == {"normalization": "paper", "norm_tolerance": 1e-9, "tolerance": 1e-10}


def test_measure_ghz_file(capsys, tmp_path):
    p = tmp_path / "ghz3.json"
    dump_state(ghz(3), p)
    code, out, _ = run(capsys, "measure", str(p), "--norm", "paper", "--format", "json")
    rep = json.loads(out)
    assert rep["measures"]["multiqubit"] == pytest.approx(1.0, abs=1e-10)
    assert rep["oracle"]["discrepancy"] <= 1e-10
    assert rep["mode_contributions"] == pytest.approx([0.5, 0.5, 0.5])


def test_unnormalized_file_is_flagged(capsys, tmp_path):
    p = tmp_path / "raw.json"
    dump_state(make_state([2, 2], [1, 0, 0, 1]), p)
    rep = json.loads(run(capsys, "measure", str(p), "--format", "json")[1])
    assert rep["input"]["renormalized"] is True
    assert rep["input"]["norm"] == pytest.approx(math.sqrt(2))
    assert rep["measures"]["bipartite"] == pytest.approx(1.0)


@pytest.mark.parametrize("content,fragment", [
    ('{"dims": [2, 2], "amplitudes": [[1, 0', "parse error"),
    ('{"dims": [2, 3], "amplitudes": [[1, 0]]}', "dimension mismatch"),
    ('{"dims": [2, 2], "amplitudes": [[1, 0], [0, 0], [0, 0], [NaN, 0]]}', "non-finite"),
    ('{"dims": [4], "amplitudes": [[1, 0], [0, 0], [0, 0], [0, 0]]}', "at least 2 subsystems"),
    ('{"dims": [2, 2], "amplitudes": [[0, 0], [0, 0], [0, 0], [0, 0]]}', "zero"),
])
def test_bad_inputs_exit_3(capsys, tmp_path, content, fragment):
    p = tmp_path / "bad.json"
    p.write_text(content)
    code, _, err = run(capsys, "measure", str(p))
    assert code == 3
    assert fragment in err


def test_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "measure", str(tmp_path / "nope.json"))
    assert code == 3
    assert "no such file" in err


def test_named(capsys):
    rep = json.loads(run(capsys, "named", "w:3", "--format", "json")[1])
    assert rep["measures"]["multiqubit"] == pytest.approx(2 * math.sqrt(2) / 3, abs=1e-10)
    rep = json.loads(run(capsys, "named", "maxent:3", "--norm", "unit_max", "--format", "json")[1])
    assert rep["measures"]["bipartite"] == pytest.approx(1.0, abs=1e-10)
    rep = json.loads(run(capsys, "named", "product:2,3", "--format", "json")[1])
    assert rep["measures"]["multipartite"] == 0


@pytest.mark.parametrize("name", ["ghz:1", "w:x", "unknown", "bell:2"])
def test_named_usage_errors(capsys, name):
    code, _, err = run(capsys, "named", name)
    assert code == 2
    assert "usage error" in err


def test_argparse_usage_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["measure", "x.json", "--norm", "bogus"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["named", "bell", "--norm-tolerance", "0"])
    assert exc.value.code == 2


def test_dump(capsys, tmp_path):
    out = tmp_path / "g.json"
    assert run(capsys, "dump", "ghz:3", "-o", str(out))[0] == 0
    assert json.loads(out.read_text())["dims"] == [2, 2, 2]
    code, text, _ = run(capsys, "dump", "bell")
    assert json.loads(text)["dims"] == [2, 2]


def test_selftest(capsys):
    code, out, _ = run(capsys, "selftest", "--seed", "3", "--trials", "20", "--format", "json")
    summary = json.loads(out)
    assert code == 0
    assert summary["ok"]
    assert {s["name"] for s in summary["suites"]} == {
        "oracle_equivalence", "local_unitary_invariance", "product_vanishing", "lagrange_identity"}
    assert run(capsys, "selftest", "--seed", "3", "--trials", "20", "--format", "json")[1] == out


def test_selftest_failure_exit_4(capsys):
    code, out, _ = run(capsys, "selftest", "--trials", "5", "--tolerance", "0")
    assert code == 4
    assert "FAIL" in out


def test_selftest_trials_zero(capsys):
    assert run(capsys, "selftest", "--trials", "0")[0] == 2


def test_experiment_identity_and_unitary(capsys):
    stats = json.loads(run(capsys, "experiment", "--filter", "identity", "--trials", "20",
                           "--format", "json")[1])
    assert stats["ratio_min"] == stats["ratio_max"] == 1.0
    stats = json.loads(run(capsys, "experiment", "--filter", "unitary", "--trials", "50",
                           "--dims", "2,3,2", "--format", "json")[1])
    assert stats["max_abs_deviation_from_1"] <= 1e-10
    assert stats["fraction_decreased"] == 0


def test_experiment_random_is_seeded(capsys):
    a = run(capsys, "experiment", "--trials", "100", "--seed", "9", "--format", "json")[1]
    b = run(capsys, "experiment", "--trials", "100", "--seed", "9", "--format", "json")[1]
    assert a == b
    stats = json.loads(a)
    assert 0 <= stats["fraction_decreased"] <= 1
    assert stats["ratio_min"] > 0
    code, out, _ = run(capsys, "experiment", "--trials", "10")
    assert code == 0 and "fraction decreased" in out


def test_experiment_usage(capsys):
    assert run(capsys, "experiment", "--trials", "0")[0] == 2
    assert run(capsys, "experiment", "--dims", "3")[0] == 2
    with pytest.raises(SystemExit):
        main(["experiment", "--dims", "a,b"])


def test_json_roundtrip_precision(capsys):
    out = run(capsys, "named", "w:4", "--format", "json")[1]
    rep = json.loads(out)
    assert json.loads(json.dumps(rep, indent=2)) == rep
    assert rep["measures"]["multiqubit"] == pytest.approx(math.sqrt(3) / 2, abs=1e-12)
