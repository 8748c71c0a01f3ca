import json
import subprocess
import sys

import pytest

from rsinf.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_rs_shifted_worked_example(capsys):
    code, out = run(capsys, "rs", "3,4,a,5", "--shifted")
    assert code == 0
    assert out == (
        '{"tableaux":[{"class":"0","rows":[["2","1"],["2"]]},'
        '{"class":"a","rows":[["a-3"]]}]}\n'
    )


def test_rs_plain(capsys):
    code, out = run(capsys, "rs", "3,1,2")
    assert code == 0
    assert json.loads(out) == {
        "tableaux": [{"class": "0", "rows": [["3", "2"], ["1"]]}]
    }


def test_rs_bad_entry(capsys):
    code, out = run(capsys, "rs", "3,oops+")
    assert code == 1
    assert "error" in json.loads(out)


def test_seq_of_round_trip(tmp_path, capsys):
    code, out = run(capsys, "rs", "3,4,a,5", "--shifted")
    doc = tmp_path / "tabs.json"
    doc.write_text(out)
    code, out = run(capsys, "seq-of", str(doc))
    assert code == 0
    assert json.loads(out) == {"seq": ["2", "2", "1", "a-3"]}


def test_seq_of_rejects_empty_rows(tmp_path, capsys):
    doc = tmp_path / "tabs.json"
    doc.write_text('{"tableaux":[{"class":"0","rows":[]}]}')
    code, out = run(capsys, "seq-of", str(doc))
    assert code == 1
    assert json.loads(out) == {"error": "tableaux must have at least one nonempty row"}


def test_interchange_path(capsys):
    code, out = run(capsys, "interchange", "0,5,3", "5,0,3")
    assert code == 0
    assert out == '{"connected":true,"path":[1]}\n'


def test_interchange_length_mismatch(capsys):
    code, out = run(capsys, "interchange", "0,5", "5,0,3")
    assert code == 0
    assert json.loads(out) == {"connected": False}


def test_interchange_reports_joseph(capsys):
    code, out = run(capsys, "interchange", "2,3", "3,4", "--shifted", "--k=-1")
    assert code == 0
    data = json.loads(out)
    assert data["joseph_equal"] is True


def test_classify(tmp_path, capsys):
    doc = tmp_path / "spec.json"
    doc.write_text(
        json.dumps(
            {
                "regions": [
                    {"type": "omega", "exceptions": ["2", "2"], "tail": "0"}
                ]
            }
        )
    )
    code, out = run(capsys, "classify", str(doc))
    assert code == 0
    assert out == '{"ideal":{"r":0,"g":0,"X":[2,2],"Y":[]}}\n'


def test_classify_zero(tmp_path, capsys):
    doc = tmp_path / "spec.json"
    doc.write_text(
        json.dumps(
            {
                "regions": [
                    {"type": "omega", "exceptions": [], "tail": "0"},
                    {"type": "omega", "exceptions": [], "tail": "a"},
                ]
            }
        )
    )
    code, out = run(capsys, "classify", str(doc))
    assert code == 0
    data = json.loads(out)
    assert data["ideal"] == "zero"
    assert "classes" in data["reason"]


def test_classify_missing_file(capsys):
    code, out = run(capsys, "classify", "/no/such/file.json")
    assert code == 1
    assert "error" in json.loads(out)


def test_rs_inf(tmp_path, capsys):
    doc = tmp_path / "block.json"
    doc.write_text(
        json.dumps({"axis": "neg", "exceptions": ["a"], "left_tail": "0"})
    )
    code, out = run(capsys, "rs-inf", str(doc))
    assert code == 0
    data = json.loads(out)
    assert data["axis"] == "neg"
    assert data["r"] == 1
    assert data["underline"] == ["a+1"]
    assert data["first_row"] == {"window": [], "left_law": "1"}
    assert data["ideal"] == {"r": 1, "g": 0, "X": [], "Y": []}
    assert data["finite_tableaux"] == [{"class": "a", "rows": [["a+1"]]}]


def test_rs_inf_bad_axis(tmp_path, capsys):
    doc = tmp_path / "block.json"
    doc.write_text('{"axis":"up","exceptions":[],"left_tail":"0"}')
    code, out = run(capsys, "rs-inf", str(doc))
    assert code == 1
    assert json.loads(out) == {"error": "unknown axis 'up'; use neg, pos or all"}


def test_cls_level_lines(capsys):
    code, out = run(capsys, "cls-level", "0,0,0;;1", "--level=3", "--bound=5")
    assert code == 0
    assert out == "1,1,0\n0,0,0\n"


def test_cls_level_too_small(capsys):
    code, out = run(capsys, "cls-level", "2,0,0;1;", "--level=3", "--bound=5")
    assert code == 1
    assert "too small" in json.loads(out)["error"]


def test_cls_gamma_line(capsys):
    code, out = run(capsys, "cls-gamma", "2,0,0;;", "--level=2")
    assert code == 0
    assert out == "3,3,0,0\n"


def test_cls_member(capsys):
    code, out = run(capsys, "cls-member", "0,0,0;2,1;", "2,1,0")
    assert code == 0
    assert out == '{"member":true}\n'
    code, out = run(capsys, "cls-member", "0,0,0;1;", "3,0,0")
    assert code == 0
    assert out == '{"member":false}\n'


def test_params_grammar_error(capsys):
    code, out = run(capsys, "cls-member", "1,0,2", "1,0")
    assert code == 1
    assert json.loads(out) == {
        "error": 'parameters are "r\',r\'\',g;X;Y", e.g. "1,0,2;2,1;"'
    }


@pytest.mark.parametrize("argv", [["rs"], ["cls-level", "0,0,0;;"]])
def test_missing_arguments_exit_2(argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_installed_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "rsinf.cli", "rs", "2,1"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout) == {
        "tableaux": [{"class": "0", "rows": [["2", "1"]]}]
    }
