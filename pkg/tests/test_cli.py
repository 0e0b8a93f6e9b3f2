import io
import json

import pytest

from specres.cli import main


def run(argv, stdin=""):
    out = io.StringIO()
    code = main(argv, stdin=io.StringIO(stdin), stdout=out)
    return code, out.getvalue()


def test_eckart_csv_with_specialization():
    code, out = run(["residues", "--family", "eckart", "--order", "3", "--format", "csv", "--params", "u=0"])
    assert code == 0
    assert out.splitlines()[-1] == "3,v + 2/3 v^2 + 1/12 v^3"


def test_morse_pretty():
    assert run(["residues", "--family", "morse", "--order", "1"]) == (0, "rho_1 = u\n")


def test_free_json():
    code, out = run(["residues", "--family", "free", "--order", "2", "--format", "json"])
    data = json.loads(out)
    grade2 = {tuple(t["word"]): t["coeff"] for t in data["terms"] if t["grade"] == 2}
    assert grade2 == {(2,): "1/2", (1, 1): "1/2"}


def test_output_is_byte_stable():
    argv = ["residues", "--family", "poschl-teller", "--order", "5", "--format", "json"]
    assert run(argv) == run(argv)


def test_invert_scalar_residues():
    code, out = run(["invert-residues", "--order", "1"], '{"rho": ["1"]}')
    assert code == 0
    U = json.loads(out)["U"]
    assert U["terms"] == [{"grade": 1, "word": [], "coeff": "1/1"}]


def test_invert_series_input_round_trip():
    _, rho = run(["residues", "--family", "free", "--order", "3", "--format", "json"])
    code, out = run(["invert-residues"], rho)
    assert code == 0
    terms = json.loads(out)["U"]["terms"]
    assert terms == [{"grade": n, "word": [n], "coeff": "1/1"} for n in (1, 2, 3)]


def test_malformed_json(capsys):
    code, _ = run(["invert-residues"], "{oops")
    assert code == 2
    assert "line 1, column 2" in capsys.readouterr().err


def test_schema_error_location(capsys):
    code, _ = run(["invert-residues"], '{"order": 1, "terms": [{"grade": 1, "word": [1], "coeff": "0.5"}]}')
    assert code == 2
    assert "$.terms[0].coeff" in capsys.readouterr().err


def test_bad_flags():
    with pytest.raises(SystemExit) as info:
        main(["residues", "--order", "2", "--nope"])
    assert info.value.code == 2
    assert run(["residues", "--family", "eckart", "--order", "2", "--params", "w=1"])[0] == 2


def test_guards(monkeypatch):
    assert run(["residues", "--order", "11"])[0] == 3
    assert run(["residues", "--family", "eckart", "--order", "15"])[0] == 3
    monkeypatch.setenv("SPECRES_MAX_ORDER", "2")
    assert run(["residues", "--family", "eckart", "--order", "3"])[0] == 3
    assert run(["verify", "--suite", "rhoinv", "--max-order", "3"])[0] == 3


def test_darboux_json():
    code, out = run(["darboux", "--order", "3"])
    assert code == 0
    data = json.loads(out)
    assert set(data) == {"U", "W", "U_tilde", "rho", "minus_rho"}
    assert {"grade": 2, "word": [1, 1], "coeff": "-2/1"} in data["U_tilde"]["terms"]


def test_darboux_from_stdin():
    potential = '{"order": 2, "terms": [{"grade": 1, "word": [], "coeff": "3"}]}'
    code, out = run(["darboux", "--input", "-", "--format", "csv"], potential)
    assert code == 0
    assert out.startswith("series,grade,word,coeff\n")


@pytest.mark.parametrize("suite", ["rhoinv", "darboux", "kdv", "cube", "csums", "tableaux"])
def test_verify_suites(suite):
    code, out = run(["verify", "--suite", suite, "--max-order", "5", "--format", "json"])
    assert code == 0
    assert json.loads(out)["status"] == "pass"


def test_verify_kdv_reports_sign():
    code, out = run(["verify", "--suite", "kdv", "--max-order", "3"])
    assert code == 0
    assert "kdv: sign = 1" in out


def test_verify_failure_exit_code(monkeypatch):
    from specres import suites
    from specres.report import Check, VerifyReport

    def broken(N):
        r = VerifyReport("cube")
        r.add("x", N, Check(False, "forced"))
        return r

    monkeypatch.setitem(suites.SUITES, "cube", broken)
    monkeypatch.setattr("specres.cli.SUITES", suites.SUITES)
    code, out = run(["verify", "--suite", "cube", "--max-order", "3", "--format", "json"])
    assert code == 1
    assert json.loads(out)["cases"][0]["detail"] == "forced"


def test_verify_all_small():
    code, out = run(["verify", "--suite", "all", "--max-order", "4", "--format", "json"])
    assert code == 0
    data = json.loads(out)
    assert data["status"] == "pass" and len(data["suites"]) == 13


def test_compsum():
    assert run(["compsum", "--id", "csum2", "--n", "4", "--k", "1"]) == (0, "108\n")
    code, out = run(["compsum", "--id", "morse-odd", "--n", "3", "--k", "0", "--format", "json"])
    assert json.loads(out)["composition_sum"] == "4/1"
    assert run(["compsum", "--id", "corrid", "--n", "4", "--k", "0"])[0] == 2
