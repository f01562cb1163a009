import json
import subprocess
import sys

import pytest

from altcodes.alphabet import Alphabet
from altcodes.cli import main, run
from altcodes.errors import SpecError
from altcodes.language import Language
from langs import Z1, Z3_REGEX

EX1 = {"alphabet": ["a", "b"], "sets": {"Z": {"kind": "finite", "words": list(Z1)}}, "task": "rsic"}
EMBED = {
    "alphabet": ["a", "b"],
    "sets": {
        "X": {"kind": "regex", "pattern": "(aa)*b"},
        "Y": {"kind": "regex", "pattern": "ab*ab"},
        "MY": {"kind": "regex", "pattern": "ba+bb+ab*a(a+b)"},
    },
    "task": "embed",
    "params": {"class": "prefix", "x": "X", "y": "Y", "candidates": {"y": "MY"}},
}


def languages(node):
    """Every language object nested in a report."""
    if isinstance(node, dict):
        if "regex" in node and "states" in node:
            yield node
        for v in node.values():
            yield from languages(v)
    elif isinstance(node, list):
        for v in node:
            yield from languages(v)


def call(capsys, spec, *args, tmp_path=None):
    path = tmp_path / "spec.json"
    path.write_text(json.dumps(spec), encoding="utf-8")
    code = main([*args, "--input", str(path)])
    out, err = capsys.readouterr()
    return code, out, err


def test_rsic_report(capsys, tmp_path):
    code, out, _ = call(capsys, EX1, "rsic", tmp_path=tmp_path)
    assert code == 0
    rep = json.loads(out)
    assert rep["schema_version"] == 1 and rep["task"] == "rsic"
    res = rep["result"]
    assert res["verdict"] == "StrongAltInduced"
    assert res["witness"]["X"]["words"] == ["a", "ba"]
    assert [s["u"] for s in res["trace"]] == ["a"]


def test_rsic_summary_omits_trace(capsys, tmp_path):
    _, out, _ = call(capsys, EX1, "rsic", "--emit", "summary", tmp_path=tmp_path)
    assert "trace" not in json.loads(out)["result"]


def test_embed_report(capsys, tmp_path):
    code, out, _ = call(capsys, EMBED, "embed", tmp_path=tmp_path)
    assert code == 0
    res = json.loads(out)["result"]
    assert res["M_Y"]["method"] == "VerifiedCandidate"
    assert Language.from_regex(res["M_X"]["container"]["regex"], Alphabet("ab")) == Language.from_regex("a*b", Alphabet("ab"))


def test_classify_report(capsys, tmp_path):
    spec = {"alphabet": "ab", "sets": {"X": ["a", "ab"]}}
    code, out, _ = call(capsys, spec, "classify", tmp_path=tmp_path)
    classes = json.loads(out)["result"]["classes"]
    assert code == 0
    assert (classes["prefix"], classes["suffix"], classes["code"]) == (False, True, True)


def test_output_is_deterministic():
    first = json.dumps(run(EX1), sort_keys=False)
    shuffled = dict(EX1, sets={"Z": {"kind": "finite", "words": list(reversed(Z1))}})
    assert json.dumps(run(shuffled), sort_keys=False) == first


@pytest.mark.parametrize("spec", [EX1, EMBED, {"sets": {"Z": Z3_REGEX}, "task": "rsic"}])
def test_report_languages_round_trip(spec):
    rep = run(spec)
    alphabet = Alphabet(rep["alphabet"])
    found = list(languages(rep))
    assert found
    for node in found:
        lang = Language.from_regex(node["regex"], alphabet)
        if "words" in node:
            assert lang.sorted_words() == node["words"]
        assert lang.size == node["states"]


def test_emitted_witness_verifies():
    rep = run({"sets": {"Z": Z3_REGEX}, "task": "rsic"})
    wit = rep["result"]["witness"]
    check = run({
        "sets": {"X": wit["X"]["regex"], "Y": wit["Y"]["regex"], "Z": Z3_REGEX},
        "task": "verify",
        "params": {"x": "X", "y": "Y", "z": "Z"},
    })
    assert check["result"]["valid"] is True
    assert check["result"]["subclasses"]["prefix-SAI"] == "holds"  # b+a prefix, ab+a bifix


def test_verify_container_mode():
    rep = run({"sets": {"X": ["a", "bb"], "M": "a+ba*b"}, "task": "verify",
               "params": {"target": "X", "candidate": "M", "class": "bifix"}})
    assert rep["result"]["ok"] is True


def test_complete_task():
    rep = run({"sets": {"X": "(aa)*b"}, "task": "complete", "params": {"class": "prefix"}})
    assert rep["result"]["method"] == "MinWords"
    rep = run({"sets": {"X": ["a"]}, "task": "complete", "params": {"class": "bifix"}}, bound=1)
    assert rep["result"]["container"]["words"] == ["a", "b"]


def test_timing_only_on_request():
    assert "timing_seconds" not in run(EX1)
    assert "timing_seconds" in run(EX1, timing=True)


def test_oracle_grid_task():
    rep = run({"params": {"criterion": "all", "max_size": 2, "max_len": 2}}, task="oracle-grid")
    assert rep["result"]["ok"] is True
    assert {g["criterion"] for g in rep["result"]["grids"]} >= {"rsic-completeness", "is-code", "hypercode"}


def test_spec_errors():
    with pytest.raises(SpecError):
        run({"sets": {"Z": ["ab"]}, "task": "nope"})
    with pytest.raises(SpecError):
        run({"sets": {"Z": {"kind": "finite", "words": ["abc"]}}, "task": "rsic"})
    with pytest.raises(SpecError):
        run({"sets": {"Z": ["ab"]}, "task": "rsic"}, task="classify")
    with pytest.raises(SpecError):
        run({"sets": {"Z": ["ab"]}, "task": "verify", "params": {"x": "Q", "y": "Z"}})


def test_exit_codes(capsys, tmp_path):
    code, _, err = call(capsys, {"sets": {"Z": ["a", "ab", "ba"]}}, "rsic", tmp_path=tmp_path)
    assert code == 1 and json.loads(err)["error"]["type"] == "NotACode"
    code, _, err = call(capsys, {"sets": {"Z": "a+("}}, "rsic", tmp_path=tmp_path)
    assert code == 2 and json.loads(err)["error"]["type"] == "SpecError"
    code, _, _ = call(capsys, {"sets": {"Z": ["a", "ab", "ba"]}}, "is-code", tmp_path=tmp_path)
    assert code == 0


def test_module_entry_point_reads_stdin():
    proc = subprocess.run(
        [sys.executable, "-m", "altcodes", "run"],
        input=json.dumps(EX1), capture_output=True, text=True, check=True,
    )
    assert json.loads(proc.stdout)["result"]["verdict"] == "StrongAltInduced"
