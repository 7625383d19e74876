import json

import pytest

from gl3bethe.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_scalars(tmp_path, capsys):
    out = tmp_path / "r.json"
    code, text, _ = run(capsys, "verify", "--suite", "scalars", "--trials", "10", "--seed", "7", "--out", str(out))
    assert code == 0
    assert "K residue at x_n = y_n" in text
    data = json.loads(out.read_text())
    assert data["suite"] == "scalars" and all(c["status"] == "pass" for c in data["cases"])
    assert {"identity", "params", "status", "lhs_hash", "rhs_hash"} <= set(data["cases"][0])


def test_verify_is_deterministic(tmp_path, capsys):
    paths = [tmp_path / "a.json", tmp_path / "b.json"]
    for p in paths:
        assert run(capsys, "verify", "--suite", "bethe", "--L", "2", "--seed", "3", "--out", str(p))[0] == 0
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_verify_csv_summary(tmp_path, capsys):
    out = tmp_path / "r.csv"
    assert run(capsys, "verify", "--suite", "appendix", "--L", "2", "--format", "csv", "--out", str(out))[0] == 0
    assert out.read_text().splitlines()[0] == "identity,trials,failed"


def test_duplicate_thetas_are_a_config_error(capsys):
    code, _, err = run(capsys, "verify", "--theta", "1,1,2")
    assert code == 2 and "distinct" in err


def test_bad_rational_is_a_config_error(capsys):
    assert run(capsys, "build", "--theta", "1,x")[0] == 2


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as info:
        main(["verify", "--suite", "nonsense"])
    assert info.value.code == 2


def test_build_vacuum(capsys):
    code, text, err = run(capsys, "build", "--L", "2", "--a", "0", "--b", "0")
    assert code == 0
    data = json.loads(text)
    assert data["entries"] == [{"word": "11", "num": "1", "den": "1"}]
    assert "entries 1" in err


def test_build_single_site_example(capsys):
    code, text, _ = run(capsys, "build", "--theta", "0", "--u", "2")
    assert code == 0
    assert json.loads(text)["entries"] == [{"word": "2", "num": "1", "den": "2"}]


def test_build_methods_share_digest(tmp_path, capsys):
    digests = set()
    for method in ("explicit1", "explicit2", "recursion-u", "recursion-v", "trace"):
        code, text, _ = run(capsys, "build", "--theta", "0,1/3,5/2", "--dual", "1", "--a", "2", "--b", "1",
                            "--method", method, "--out", str(tmp_path / f"{method}.json"))
        assert code == 0
        digests.add(text.split("digest ")[1].strip())
    assert len(digests) == 1


def test_build_pole_is_a_config_error(capsys):
    assert run(capsys, "build", "--theta", "0,1", "--u", "1")[0] == 2


def test_onshell_success(capsys):
    code, text, _ = run(capsys, "onshell", "--theta", "0,1/3", "--dual", "1", "--a", "1", "--b", "1")
    assert code == 0
    assert text.count(" pass") == 5


def test_onshell_rejections(capsys):
    assert run(capsys, "onshell", "--a", "0", "--b", "0")[0] == 2
    code, _, err = run(capsys, "onshell", "--tol", "1e-17")
    assert code == 2 and "unreachable" in err


def test_onshell_no_solution_exit(capsys):
    code, text, _ = run(capsys, "onshell", "--theta", "0", "--a", "1", "--b", "0", "--starts", "10")
    assert code == 1 and "no solution" in text


def test_bench_rows(capsys):
    code, text, _ = run(capsys, "bench", "--L", "3")
    assert code == 0
    lines = text.splitlines()
    assert lines[0] == "method,a,b,L,terms,millis"
    assert any(line.startswith("explicit1,2,2,3,") for line in lines)
    terms = [line.rsplit(",", 1)[0] for line in lines]
    code, again, _ = run(capsys, "bench", "--L", "3")
    assert terms == [line.rsplit(",", 1)[0] for line in again.splitlines()]


def test_bench_notes_skipped_trace_rows(capsys):
    code, text, err = run(capsys, "bench", "--L", "2", "--a-max", "3", "--b-max", "2")
    assert code == 0
    assert not any(line.startswith("trace,3,2,") for line in text.splitlines())
    assert "trace rows omitted" in err
