import json
import subprocess
import sys

import pytest

from trivext.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, (json.loads(out.out) if out.out.strip() else None), out.err


def test_classify_ex4(capsys):
    code, doc, _ = run(capsys, "classify", "TE(Z,Z/4)", "--ideal", "(6,1)", "--mult-set", "(2,0)", "--check", "s-prime")
    assert code == 0
    assert doc["schemaVersion"] == "1" and doc["command"] == "classify"
    assert doc["inputs"] == {"ring": "TE(Z, Z/4)", "ideal": [[6, 1]], "multSet": [[2, 0]], "check": "s-prime"}
    assert doc["verdict"] is True
    cert = doc["certificate"]
    assert cert["witness"]["product"] == "2^2" and cert["witness"]["value"] == 4
    assert cert["residual"] == "3Z"
    assert "elapsedMs" in doc


def test_classify_homogeneous(capsys):
    code, doc, _ = run(capsys, "classify", "TE(Z,Z/4)", "--ideal", "(6,1)", "--mult-set", "(2,0)", "--check", "homogeneous")
    assert code == 0 and doc["verdict"] is False


def test_classify_prime_with_empty_mult_set(capsys):
    code, doc, _ = run(capsys, "classify", "Z/6", "--ideal", "2", "--mult-set", "", "--check", "prime")
    assert code == 0 and doc["verdict"] is True


def test_classify_finite_certificate_is_rechecked(capsys):
    code, doc, _ = run(capsys, "classify", "Z/12", "--ideal", "0", "--mult-set", "4", "--check", "s-prime")
    cert = doc["certificate"]
    assert doc["verdict"] and cert["witness"] == 4
    # (0 : 4) recomputed independently
    assert cert["residual"]["elements"] == [x for x in range(12) if (4 * x) % 12 == 0]


@pytest.mark.parametrize("check,want", [("s-prime", True), ("s-maximal", False), ("prime", False), ("homogeneous", True)])
def test_classify_ex1(capsys, check, want):
    code, doc, _ = run(capsys, "classify", "TE(Z, Z/6)", "--ideal", "(0,2)", "--mult-set", "(2,0)", "--check", check)
    assert code == 0 and doc["verdict"] is want


def test_classify_z(capsys):
    code, doc, _ = run(capsys, "classify", "Z", "--ideal", "12", "--mult-set", "2", "--check", "s-maximal")
    assert doc["verdict"] is True and doc["certificate"]["residual"] == "3Z"
    code, _, err = run(capsys, "classify", "Z", "--check", "compactly-packed")
    assert code == 2 and "not available" in err


def test_classify_packed(capsys):
    code, doc, _ = run(capsys, "classify", "Z/6", "--mult-set", "2", "--check", "s-pm")
    assert code == 0 and doc["verdict"] is False
    assert doc["certificate"]["diagnostic"] == "several"


def test_list(capsys):
    code, doc, _ = run(capsys, "list", "Z/12", "--what", "ideals")
    assert code == 0 and len(doc["items"]) == 6
    code, doc, _ = run(capsys, "list", "TE(Z/4,Z/2)", "--what", "spec")
    items = doc["items"]
    assert len(items) == 1 and items[0]["elements"] == [[0, 0], [0, 1], [2, 0], [2, 1]]
    _, spec_s, _ = run(capsys, "list", "Z/6", "--mult-set", "5", "--what", "spec-s")
    _, spec, _ = run(capsys, "list", "Z/6", "--what", "spec")
    assert spec_s["items"] == spec["items"]
    code, doc, _ = run(capsys, "list", "TE(Z/4,Z/2)", "--what", "submodules")
    assert len(doc["items"]) == 2


def test_list_rejects_infinite(capsys):
    code, _, err = run(capsys, "list", "TE(Z, Z/2)", "--what", "ideals")
    assert code == 2 and "infinite" in err


def test_usage_errors(capsys):
    assert run(capsys, "verify", "--suite", "bogus")[0] == 2
    assert run(capsys, "classify", "TE(Z/4, Z/3)", "--check", "prime")[0] == 2
    code, _, err = run(capsys, "classify", "TE(Z/4", "--check", "prime")
    assert code == 2 and "position" in err
    assert run(capsys, "classify", "Z/12", "--mult-set", "6", "--check", "prime")[0] == 2


def test_verify_examples_and_json_file(capsys, tmp_path):
    path = tmp_path / "report.json"
    code, doc, _ = run(capsys, "verify", "--examples", "--json", str(path))
    assert code == 0 and doc["report"]["passed"] and not doc["report"]["failures"]
    assert json.loads(path.read_text())["report"] == doc["report"]


def test_verify_suite_with_catalog(capsys, tmp_path):
    cat = tmp_path / "cat.json"
    cat.write_text(json.dumps({"base_moduli": [2, 3, 4, 6], "zlayer_samples": 20}))
    code, doc, _ = run(capsys, "verify", "--suite", "th1", "--catalog", str(cat))
    assert code == 0 and doc["report"]["instances"] > 0
    cat.write_text(json.dumps({"nonsense": 1}))
    assert run(capsys, "verify", "--suite", "th1", "--catalog", str(cat))[0] == 2


def test_verify_failure_exit_code(capsys, monkeypatch):
    from trivext import cli
    from trivext.verifier import VerificationReport

    def broken(name, catalog):
        r = VerificationReport(name, instances=1)
        r.fail("x", True, False)
        return r

    monkeypatch.setattr(cli, "run_suite", broken)
    code, doc, _ = run(capsys, "verify", "--suite", "th1")
    assert code == 1 and not doc["report"]["passed"]


def test_output_is_stable(capsys):
    args = ("classify", "TE(Z,Z/2)", "--ideal", "(6,1)", "--mult-set", "(2,0)", "--check", "s-maximal")
    _, a, _ = run(capsys, *args)
    _, b, _ = run(capsys, *args)
    a.pop("elapsedMs"), b.pop("elapsedMs")
    assert json.dumps(a) == json.dumps(b)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "trivext", "verify", "--examples"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["report"]["passed"]
