import json

from palfact.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_len_text(capsys):
    code, out, _ = run_cli(capsys, "len", "lit:abaab")
    assert code == 0
    assert out == "pal=2 lgpal=3 rgpal=2\n"


def test_len_json(capsys):
    code, out, _ = run_cli(capsys, "len", "lit:abaab", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["schema_version"] == 1
    assert (doc["pal"], doc["lgpal"], doc["rgpal"]) == (2, 3, 2)


def test_len_rejects_streams(capsys):
    code, _, err = run_cli(capsys, "len", "periodic:ab")
    assert code == 2
    assert "stream" in err


def test_bad_spec_names_token(capsys):
    code, _, err = run_cli(capsys, "len", "bogus:xyz")
    assert code == 2
    assert "bogus:xyz" in err


def test_decompose_json(capsys):
    code, out, _ = run_cli(capsys, "decompose", "lit:aabaab", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["minimal"]["pal"] == 2
    assert doc["minimal"]["decompositions"] == [[[1, 2], [3, 6]], [[1, 5], [6, 6]]]
    assert doc["minimal"]["truncated"] is False


def test_decompose_text_uses_input_notation(capsys):
    code, out, _ = run_cli(capsys, "decompose", "lit:aabaab")
    assert code == 0
    assert "aa . baab" in out and "aabaa . b" in out
    code, out, _ = run_cli(capsys, "decompose", "lit:121312")
    assert code == 0
    assert "1 . 21312" in out
    assert "121 . 3 . 1 . 2" in out  # left greedy, digit notation


def test_profile_csv_first_attainment_row(capsys):
    code, out, _ = run_cli(
        capsys, "profile", "fib", "--horizon", "6000", "--format", "csv"
    )
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "n,pal,lgpal,rgpal,max_pal,max_lgpal,max_rgpal"
    assert lines[-1] == "m,1,2,9,62,297,1154,5473"
    assert len(lines) == 6002


def test_profile_accepts_finite_words(capsys):
    code, out, _ = run_cli(capsys, "profile", "lit:abaab", "--horizon", "100",
                           "--format", "csv")
    assert code == 0
    lines = out.strip().split("\n")
    assert len(lines) == 7  # header, 5 rows, m-row


def test_bounds_text(capsys):
    code, out, _ = run_cli(capsys, "bounds", "periodic:ababa",
                           "--horizon", "1000")
    assert code == 0
    assert "prefix_max=2" in out
    assert "factor_max=3" in out
    assert "((ab)^i a)^w" in out


def test_next_command(capsys):
    code, out, _ = run_cli(capsys, "next", "lit:ab", "--max-len", "8")
    assert code == 0
    assert "aba" in out and "abba" in out


def test_verify_single_suite(capsys):
    code, out, _ = run_cli(capsys, "verify", "occdiff")
    assert code == 0
    assert "[OK] suite occdiff" in out
    assert "[FAIL]" not in out


def test_verify_json(capsys):
    code, out, _ = run_cli(capsys, "verify", "evperiodic", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["results"][0]["name"] == "evperiodic"
    assert doc["results"][0]["ok"] is True


def test_experiments_json(capsys):
    code, out, _ = run_cli(capsys, "experiments", "occdiff", "multibonacci",
                           "--format", "json")
    assert code == 0
    doc = json.loads(out)
    names = [r["name"] for r in doc["results"]]
    assert names == ["multibonacci", "occdiff"]  # canonical sorted order
    assert all(r["ok"] for r in doc["results"])


def test_experiments_text_with_json_out(tmp_path, capsys):
    target = tmp_path / "exp.json"
    code, out, _ = run_cli(capsys, "experiments", "occdiff",
                           "--out", str(target))
    assert code == 0
    assert "occdiff: ok" in out
    doc = json.loads(target.read_text())
    assert doc["results"][0]["name"] == "occdiff"


def test_experiments_rejects_unknown(capsys):
    code, _, err = run_cli(capsys, "experiments", "oracles")
    assert code == 2
    assert "oracles" in err


def test_deterministic_output(capsys):
    _, out1, _ = run_cli(capsys, "verify", "oracles", "--seed", "3",
                         "--format", "json")
    _, out2, _ = run_cli(capsys, "verify", "oracles", "--seed", "3",
                         "--format", "json")
    assert out1 == out2  # byte-identical without --timings
    _, out3, _ = run_cli(capsys, "verify", "oracles", "--seed", "3",
                         "--format", "json", "--timings")
    assert "runtime_seconds" in out3 and "runtime_seconds" not in out1


def test_out_file(tmp_path, capsys):
    target = tmp_path / "report.csv"
    code, out, _ = run_cli(capsys, "profile", "fib", "--horizon", "50",
                           "--format", "csv", "--out", str(target))
    assert code == 0
    assert out == ""
    assert target.read_text().startswith("n,pal,")


def test_cap_override(capsys):
    code, _, err = run_cli(capsys, "profile", "fib", "--horizon", "200",
                           "--cap", "100")
    assert code == 2
    assert "cap" in err.lower()
