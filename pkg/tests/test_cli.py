import json

import pytest

from qzeta import cli, ranklab
from qzeta.errors import MiningVerificationError


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_expand_weight2(capsys):
    code, out, _ = run_cli(capsys, "expand", "--index", "(2)", "--order", "6")
    assert code == 0
    assert out == "1 3 4 7 6 12\n"


def test_expand_5_1(capsys):
    code, out, _ = run_cli(capsys, "expand", "--index", "(5,1)", "--order", "13")
    assert code == 0
    assert out == "0 0 0 0 0 0 0 1 1 6 6 23 22\n"


def test_expand_not_admissible(capsys):
    code, out, err = run_cli(capsys, "expand", "--index", "(1,2)")
    assert code == 2
    assert "index not admissible" in err


def test_expand_parse_error(capsys):
    code, _, err = run_cli(capsys, "expand", "--index", "(2,x)")
    assert code == 2 and "error" in err


def test_expand_json(capsys):
    code, out, _ = run_cli(
        capsys, "expand", "--index", "(3,1)", "--order", "5", "--format", "json"
    )
    assert code == 0
    obj = json.loads(out)
    assert obj == {
        "index": [3, 1],
        "kind": "modified",
        "trunc": 5,
        "coeffs": ["0", "0", "0", "0", "1", "1"],
    }


def test_expand_raw(capsys):
    code, out, _ = run_cli(capsys, "expand", "--index", "(2)", "--order", "4", "--raw")
    assert code == 0
    assert out == "1 1 -1 2\n"  # (1-q)^2 (q + 3q^2 + 4q^3 + 7q^4) through q^4


def test_verify_paths(capsys):
    assert run_cli(capsys, "verify", "ohno", "--index", "(3)", "--l", "1", "--order", "60")[0] == 0
    assert run_cli(capsys, "verify", "cyclic", "--index", "(2,1)", "--order", "40")[0] == 0
    assert run_cli(capsys, "verify", "lemma", "--index", "(3,1)", "--order", "30")[0] == 0
    assert run_cli(capsys, "verify", "duality", "--index", "(4,2)", "--order", "30")[0] == 0
    assert run_cli(capsys, "verify", "ohno-zagier", "--weight", "4", "--order", "25")[0] == 0
    assert run_cli(capsys, "verify", "qdiff", "--index", "(3,1)", "--order", "20")[0] == 0


def test_verify_requires_index(capsys):
    code, _, err = run_cli(capsys, "verify", "cyclic")
    assert code == 2 and "--index" in err


def test_verify_cyclic_needs_part_ge2(capsys):
    code, _, err = run_cli(capsys, "verify", "cyclic", "--index", "(1,1)")
    assert code == 2


def test_table_rank(capsys):
    code, out, _ = run_cli(capsys, "table", "rank", "--max-weight", "8")
    assert code == 0
    lines = out.splitlines()
    table = {line.split("\t")[0]: line.split("\t")[1:] for line in lines}
    assert table["weight"] == ["2", "3", "4", "5", "6", "7", "8"]
    assert table["rank_A_k"] == ["1", "1", "2", "3", "6", "9", "18"]
    assert table["by_cyclic_and_ohno"] == ["1", "1", "2", "3", "6", "9", "18"]
    assert table["rank_A_le_k"] == ["1", "2", "4", "7", "11", "18", "27"]
    assert table["d_k"] == ["1", "1", "1", "2", "2", "3", "4"]
    assert table["sum_d_j"] == ["1", "2", "3", "5", "7", "10", "14"]
    assert table["sum_rank_A_j"] == ["1", "2", "4", "7", "13", "22", "40"]


def test_table_needs_extended_for_9(capsys):
    code, _, err = run_cli(capsys, "table", "rank", "--max-weight", "9")
    assert code == 2 and "--extended" in err


def test_mine_weight2(capsys):
    code, out, _ = run_cli(capsys, "mine", "--weight", "2", "--verify-order", "20")
    assert code == 0
    assert out == "kernel dimension 0\n"


def test_mine_weight4_with_certificates(capsys, tmp_path):
    out_path = tmp_path / "certs.jsonl"
    code, out, _ = run_cli(
        capsys, "mine", "--weight", "4", "--verify-order", "60", "--out", str(out_path)
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "kernel dimension 2"
    assert all("verified_to=60" in line for line in lines[1:])
    certs = [json.loads(line) for line in out_path.read_text().splitlines()]
    assert len(certs) == 2
    for cert in certs:
        assert cert["verified_to"] == 60
        assert all(set(t) == {"index", "coeff"} for t in cert["terms"])


def test_mine_reverification_failure_exits_3(capsys, monkeypatch):
    def boom(*args, **kwargs):
        raise MiningVerificationError("candidate failed")

    monkeypatch.setattr(ranklab, "mine_relations", boom)
    code, _, err = run_cli(capsys, "mine", "--weight", "4")
    assert code == 3 and "candidate failed" in err


def test_mine_unwritable_out_exits_4(capsys, tmp_path):
    blocker = tmp_path / "dir_as_file"
    blocker.mkdir()
    code, _, err = run_cli(
        capsys, "mine", "--weight", "3", "--verify-order", "40", "--out", str(blocker)
    )
    assert code == 4


def test_cache_dir_cold_warm_identical(capsys, tmp_path):
    cache = str(tmp_path / "cache")
    cold = run_cli(capsys, "expand", "--index", "(4,2)", "--order", "13", "--cache-dir", cache)
    warm = run_cli(capsys, "expand", "--index", "(4,2)", "--order", "13", "--cache-dir", cache)
    assert cold == warm and cold[0] == 0


def test_cache_env_var(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("QZETA_CACHE", str(tmp_path / "envcache"))
    code, out, _ = run_cli(capsys, "expand", "--index", "(3,1)", "--order", "13")
    assert code == 0
    assert (tmp_path / "envcache" / "weight_0004.jsonl").exists()


def test_cache_dir_is_file_exits_4(capsys, tmp_path):
    blocker = tmp_path / "blocker"
    blocker.write_text("not a directory")
    code, _, err = run_cli(
        capsys, "expand", "--index", "(2)", "--cache-dir", str(blocker)
    )
    assert code == 4


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        cli.main(["expand"])  # missing --index
    assert exc.value.code == 2
