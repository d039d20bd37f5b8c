import io
import json
import subprocess
import sys

import pytest

from lietame.cli import EXIT_INPUT, EXIT_OK, EXIT_UNSUPPORTED, run
from lietame.document import ParseError, ValidationError, algebra_to_document, emit_algebra, parse_algebra, parse_document
from lietame.lie import killing_form
from lietame.named import CORPUS, BadRecipe, build_named

SL2_DOC = {
    "name": "sl2",
    "dim": 3,
    "basis": ["e", "h", "f"],
    "brackets": [
        {"left": "h", "right": "e", "result": [{"basis": "e", "coeff": "2"}]},
        {"left": "h", "right": "f", "result": [{"basis": "f", "coeff": "-2"}]},
        {"left": "e", "right": "f", "result": [{"basis": "h", "coeff": "1"}]},
    ],
}


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_parse_sl2_document():
    alg, name = parse_document(json.dumps(SL2_DOC))
    assert name == "sl2" and alg.dim == 3
    assert killing_form(alg) == [[0, 0, 4], [0, 8, 0], [4, 0, 0]]


@pytest.mark.parametrize(
    "mutate, error",
    [
        (lambda d: d["brackets"][0]["result"][0].update(coeff="1/0"), ParseError),
        (lambda d: d["brackets"][0]["result"][0].update(coeff=0.5), ParseError),
        (lambda d: d["brackets"][0].update(left="x"), ParseError),
        (lambda d: d.update(basis=["e", "e", "f"]), ParseError),
        (lambda d: d.update(dim=4), ParseError),
        (lambda d: d["brackets"].append({"left": "e", "right": "e", "result": [{"basis": "h", "coeff": "1"}]}), ValidationError),
        (lambda d: d["brackets"][0]["result"][0].update(coeff="3"), ValidationError),
    ],
)
def test_document_errors(mutate, error):
    doc = json.loads(json.dumps(SL2_DOC))
    mutate(doc)
    with pytest.raises(error):
        parse_algebra(json.dumps(doc))


def test_malformed_json():
    with pytest.raises(ParseError):
        parse_algebra("{not json")
    with pytest.raises(ParseError):
        parse_algebra("[1, 2]")


@pytest.mark.parametrize("recipe", sorted(CORPUS))
def test_document_round_trip(recipe):
    alg = build_named(recipe)
    doc = algebra_to_document(alg, recipe)
    back, name = parse_document(emit_algebra(alg, recipe))
    assert name == recipe
    assert back.sc == alg.sc
    assert algebra_to_document(back, recipe) == doc


def test_bad_recipes():
    for bad in ("sl(1)", "nonsense", "semidirect(sl(2))", "sl(2", "semidirect(sl(2), -1)"):
        with pytest.raises((BadRecipe, ValueError)):
            build_named(bad)


def test_classify_json():
    code, out, _ = call("classify", "--named", "sl(2)", "--json")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["command"] == "classify"
    assert data["result"]["kind"] == "tame" and data["result"]["class"] == 1
    assert set(data) == {"command", "input", "result", "paper_rule"}


def test_global_json_flag_and_wild_exit_zero():
    code, out, _ = call("--json", "classify", "--named", "heisenberg")
    assert code == EXIT_OK
    assert json.loads(out)["result"]["rule"] == "solvable"


def test_classify_file(tmp_path):
    path = tmp_path / "sl2.json"
    path.write_text(json.dumps(SL2_DOC))
    code, out, _ = call("classify", "--input", str(path))
    assert code == EXIT_OK and "class 1" in out


def test_input_errors(tmp_path):
    bad = tmp_path / "malformed.json"
    bad.write_text("{")
    assert call("classify", "--input", str(bad))[0] == EXIT_INPUT
    assert call("classify", "--input", str(tmp_path / "missing.json"))[0] == EXIT_INPUT
    assert call("classify")[0] == EXIT_INPUT
    assert call("classify", "--named", "bogus(3)")[0] == EXIT_INPUT
    assert call("frobnicate")[0] == EXIT_INPUT
    assert call("classify", "--named", "sl(2)", "--bogus")[0] == EXIT_INPUT
    assert call("tensor", "--type", "A1", "--a", "-1", "--b", "1")[0] == EXIT_INPUT
    assert call("tensor", "--type", "Q7", "--a", "1", "--b", "1")[0] == EXIT_INPUT
    code, _, err = call("nope")
    assert code == EXIT_INPUT and "usage" in err


def test_tensor_json():
    code, out, _ = call("tensor", "--type", "A1", "--a", "1", "--b", "1", "--json")
    assert code == EXIT_OK
    comps = json.loads(out)["result"]["components"]
    assert [(c["highest_weight"], c["multiplicity"]) for c in comps] == [([2], 1), ([0], 1)]


def test_radical_and_levi():
    code, out, _ = call("radical", "--named", "semidirect(sl(2), 1)", "--json")
    data = json.loads(out)["result"]
    assert code == EXIT_OK and data["dim"] == 2 and data["abelian"]
    code, out, _ = call("levi", "--named", "semidirect(sl(2), 1)", "--json")
    data = json.loads(out)["result"]
    assert data["dim"] == 3 and data["radical_dim"] == 2
    assert all(isinstance(x, str) for row in data["basis"] for x in row)


def test_quiver_dot(tmp_path):
    path = tmp_path / "chain.dot"
    code, out, _ = call("quiver", "--type", "A1", "--module", "1", "--seed", "0", "--depth", "3", "--dot", str(path))
    assert code == EXIT_OK
    text = path.read_text()
    assert text.startswith("digraph K_I {") and text.count("->") == 6
    code, out, _ = call("quiver", "--type", "A1", "--module", "1", "--depth", "3")
    assert out.strip() == text.strip()


def test_detect_wild_cli():
    code, out, _ = call("detect-wild", "--type", "A1", "--module", "2", "--json")
    assert code == EXIT_OK and json.loads(out)["result"]["witness"]["rule"] == "BigRadicalDim"
    code, out, _ = call("detect-wild", "--type", "A1", "--module", "1", "--json")
    assert json.loads(out)["result"]["witness"] is None
    code, out, _ = call("detect-wild", "--type", "A1", "--module", "2", "--disable", "BigRadicalDim", "--json")
    assert json.loads(out)["result"]["witness"]["rule"] == "LargeModule"


def test_unsupported_exit_code(monkeypatch):
    import lietame.cli as cli
    from lietame.classify import Verdict

    monkeypatch.setattr(cli, "classify", lambda alg: Verdict.unsupported("non-split"))
    assert call("classify", "--named", "sl(2)")[0] == EXIT_UNSUPPORTED


def test_console_script_entry():
    proc = subprocess.run(
        [sys.executable, "-m", "lietame.cli", "classify", "--named", "semidirect(sl(2), 1)", "--json"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["result"]["class"] == 4
