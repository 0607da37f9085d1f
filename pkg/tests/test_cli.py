import json

import pytest

from qkostka import cli
from qkostka.cache import cache_key, load, resolve_cache_dir, store
from qkostka.compositions import Composition
from qkostka.qexact import QPolynomial


def run(capsys, *argv):
    # normalize argparse's SystemExit to the process exit code it produces
    try:
        code = cli.main(list(argv))
    except SystemExit as exc:
        code = exc.code
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_kostka_text(capsys):
    code, out, _ = run(capsys, "kostka", "--m", "1,1,1,1", "--weight", "0", "--level", "2")
    assert code == 0
    assert out.strip() == "q^2 + q^4"


def test_kostka_restricted_flag(capsys):
    code, out, _ = run(
        capsys, "kostka", "--m", "1^4", "--weight", "0", "--level", "2", "--restricted"
    )
    assert code == 0
    assert out.strip() == "q^2 + q^4"


def test_kostka_routes_agree(capsys):
    outputs = set()
    for route in ("fermionic", "alternating", "charge", "bgg"):
        code, out, _ = run(
            capsys,
            "kostka", "--m", "1^6", "--weight", "0", "--level", "2", "--route", route,
        )
        assert code == 0
        outputs.add(out)
    assert len(outputs) == 1


def test_kostka_json(capsys):
    code, out, _ = run(
        capsys,
        "kostka", "--m", "1^4", "--weight", "0", "--level", "2", "--format", "json",
    )
    assert code == 0
    obj = json.loads(out)
    assert obj["m"] == "1^4"
    assert QPolynomial.from_json_dict(obj["polynomial"]) == QPolynomial.from_integer_terms(
        {2: 1, 4: 1}
    )


def test_kostka_csv(capsys):
    code, out, _ = run(
        capsys,
        "kostka", "--m", "1^4", "--weight", "0", "--level", "2",
        "--reversed", "--format", "csv",
    )
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "level,weight,m,route,exponent_numerator,coefficient"
    assert lines[1:] == ["2,0,1^4,reversed,0,1", "2,0,1^4,reversed,8,1"]


def test_kostka_unrestricted(capsys):
    code, out, _ = run(capsys, "kostka", "--m", "1^4", "--weight", "0")
    assert code == 0
    assert out.strip() == "q^2 + q^4"


def test_kostka_unrestricted_charge_route(capsys):
    code_a, out_a, _ = run(capsys, "kostka", "--m", "2,2,1", "--weight", "1")
    code_b, out_b, _ = run(
        capsys, "kostka", "--m", "2,2,1", "--weight", "1", "--route", "charge"
    )
    assert code_a == code_b == 0
    assert out_a == out_b


def test_exit_code_2_on_bad_input(capsys):
    code, _, _ = run(capsys, "kostka", "--m", "bogus", "--weight", "0")
    assert code == 2

    code, _, err = run(capsys, "kostka", "--m", "1^4", "--weight", "0", "--reversed")
    assert code == 2
    assert "level" in err

    code, _, err = run(capsys, "kostka", "--m", "1^4", "--weight", "0", "--restricted")
    assert code == 2

    code, _, _ = run(capsys, "kostka", "--m", "1^4", "--weight", "-1")
    assert code == 2

    code, _, _ = run(capsys, "kostka", "--m", "1^4", "--weight", "0", "--route", "bgg")
    assert code == 2

    code, _, _ = run(capsys, "verify", "nonsense")
    assert code == 2


def test_kostka_invalid_weight_for_level(capsys):
    code, _, err = run(
        capsys, "kostka", "--m", "1^4", "--weight", "3", "--level", "2"
    )
    assert code == 2


def test_verify_text(capsys):
    code, out, _ = run(
        capsys,
        "verify", "routes", "--max-weight", "4", "--max-level", "2",
    )
    assert code == 0
    assert "suite routes" in out
    assert "-> pass" in out


def test_verify_json(capsys):
    code, out, _ = run(
        capsys,
        "verify", "routes", "--max-weight", "4", "--max-level", "2",
        "--format", "json",
    )
    assert code == 0
    report = json.loads(out)
    assert report["suites"][0]["suite"] == "routes"
    assert report["suites"][0]["passed"] is True
    assert report["suites"][0]["failures"] == 0


def test_verify_worker_independence(capsys):
    for suite in ("routes", "weyl"):
        args = ["verify", suite, "--max-weight", "4", "--max-level", "2",
                "--order", "6", "--format", "json"]
        code_a, out_a, _ = run(capsys, *args, "--workers", "1")
        code_b, out_b, _ = run(capsys, *args, "--workers", "3")
        assert code_a == code_b == 0
        assert out_a == out_b


def test_verify_exit_one_on_hard_failure(monkeypatch, capsys):
    from qkostka import verify as verify_mod
    from qkostka.reports import AuditRecord

    def broken(cfg):
        res = verify_mod.SuiteResult(suite="routes")
        res.checked = 1
        res.records.append(
            AuditRecord({"x": 0}, "a", "b", QPolynomial.one(), hard=True)
        )
        return res

    monkeypatch.setitem(verify_mod.SUITES, "routes", broken)
    code, out, _ = run(capsys, "verify", "routes")
    assert code == 1
    assert "FAIL" in out


def test_verify_exit_zero_on_soft_mismatch(monkeypatch, capsys):
    from qkostka import verify as verify_mod
    from qkostka.reports import AuditRecord

    def audited(cfg):
        res = verify_mod.SuiteResult(suite="routes")
        res.checked = 1
        res.records.append(
            AuditRecord({"x": 0}, "a", "b", QPolynomial.one(), hard=False)
        )
        return res

    monkeypatch.setitem(verify_mod.SUITES, "routes", audited)
    code, out, _ = run(capsys, "verify", "routes")
    assert code == 0
    assert "audit mismatches 1" in out


def test_table_kostka_csv(capsys):
    code, out, _ = run(
        capsys, "table", "kostka", "--max-weight", "3", "--max-level", "2"
    )
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "level,weight,m,exponent_numerator,coefficient"
    assert "1,0,1^2,4,1" in lines


def test_table_verlinde(capsys):
    code, out, _ = run(
        capsys, "table", "verlinde", "--max-weight", "4", "--max-level", "2",
        "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["kind"] == "verlinde"
    assert all(row["exponent_numerator"] == 0 for row in payload["rows"])


def test_table_characters(capsys):
    code, out, _ = run(
        capsys, "table", "characters", "--model", "3", "4", "--order", "4",
        "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    vacuum = [
        row for row in payload["rows"] if row["r"] == 1 and row["s"] == 1
    ]
    assert [(row["exponent_numerator"], row["coefficient"]) for row in vacuum] == [
        (0, "1"), (8, "1"), (12, "1"), (16, "2"),
    ]


def test_table_out_file(tmp_path, capsys):
    target = tmp_path / "out.csv"
    code, out, _ = run(
        capsys, "table", "kostka", "--max-weight", "3", "--max-level", "1",
        "--out", str(target),
    )
    assert code == 0
    assert out == ""
    assert target.read_text().startswith("level,weight,m,")


def test_table_cache_round_trip(tmp_path, capsys):
    cache = tmp_path / "cache"
    args = ["table", "kostka", "--max-weight", "3", "--max-level", "1",
            "--cache-dir", str(cache), "--format", "json"]
    code, first, err1 = run(capsys, *args)
    assert code == 0
    assert "cache store" in err1
    code, second, err2 = run(capsys, *args)
    assert code == 0
    assert "cache hit" in err2
    assert first == second


def test_cache_env_var(tmp_path, capsys, monkeypatch):
    cache = tmp_path / "envcache"
    monkeypatch.setenv("KOSTKA_CACHE_DIR", str(cache))
    code, _, err = run(capsys, "table", "kostka", "--max-weight", "2", "--max-level", "1")
    assert code == 0
    assert "cache store" in err
    assert list(cache.glob("*.json"))


def test_resolve_cache_dir(monkeypatch, tmp_path):
    monkeypatch.delenv("KOSTKA_CACHE_DIR", raising=False)
    assert resolve_cache_dir(None) is None
    assert resolve_cache_dir(str(tmp_path)) == tmp_path
    monkeypatch.setenv("KOSTKA_CACHE_DIR", str(tmp_path / "env"))
    assert resolve_cache_dir(None) == tmp_path / "env"
    assert resolve_cache_dir(str(tmp_path / "flag")) == tmp_path / "flag"


def test_cache_load_tolerates_garbage(tmp_path):
    key = cache_key("0", "kostka", {"a": 1})
    assert load(tmp_path, key) is None
    (tmp_path / f"{key}.json").write_text("{not json")
    assert load(tmp_path, key) is None
    store(tmp_path, key, {"rows": []})
    assert load(tmp_path, key) == {"rows": []}


def test_cache_key_stability():
    a = cache_key("0.1.0", "kostka", {"max_weight": 8, "max_level": 3})
    b = cache_key("0.1.0", "kostka", {"max_level": 3, "max_weight": 8})
    assert a == b
    assert a != cache_key("0.1.0", "kostka", {"max_weight": 9, "max_level": 3})
    assert a != cache_key("0.2.0", "kostka", {"max_weight": 8, "max_level": 3})


def test_factor_string_round_trip(capsys):
    assert cli.factor_string(Composition((4,))) == "1^4"
    assert cli.factor_string(Composition((4, 1))) == "1^4,2"
    assert cli.factor_string(Composition(())) == "0^0"
