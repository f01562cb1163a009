"""Command-line front end: read a JSON spec file, run one analysis, print a
JSON report.

Spec file::

    {
      "alphabet": ["a", "b"],
      "sets": {"Z": {"kind": "finite", "words": ["aab", "aaba"]},
               "Y": {"kind": "regex", "pattern": "b+ab*a"}},
      "task": "rsic",
      "params": {"target": "Z"}
    }
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field

from . import ops, report, validation
from .alphabet import Alphabet
from .altinduced import rsic, subclass_characterize, verify_witness
from .bifix import complete_bifix_bounded, verify_bifix_container
from .codes import classify, is_code, is_prefix_code, is_suffix_code
from .embed import EMBED_CLASSES, embed_strong
from .errors import AltCodesError, ClassViolation, SpecError
from .language import Language
from .maximal import (
    complete_prefix,
    complete_prefix_finite,
    complete_prefix_regular,
    complete_suffix,
    complete_suffix_finite,
    complete_suffix_regular,
    is_maximal_prefix,
    is_maximal_suffix,
)

TASKS = ("classify", "is-code", "rsic", "complete", "embed", "verify", "oracle-grid")
DEFAULT_BOUND = 6


@dataclass
class Spec:
    alphabet: Alphabet
    sets: dict = field(default_factory=dict)  # name -> Language
    task: str | None = None
    params: dict = field(default_factory=dict)

    def get(self, name) -> Language:
        if name not in self.sets:
            raise SpecError(f"set {name!r} is not defined (have {sorted(self.sets)})")
        return self.sets[name]

    def target(self) -> tuple[str, Language]:
        name = self.params.get("target")
        if name is None:
            if len(self.sets) == 1:
                name = next(iter(self.sets))
            elif "Z" in self.sets:
                name = "Z"
            else:
                raise SpecError("several sets defined; name one with params.target")
        return name, self.get(name)


def _parse_set(name, entry, alphabet: Alphabet) -> Language:
    if isinstance(entry, list):
        entry = {"kind": "finite", "words": entry}
    elif isinstance(entry, str):
        entry = {"kind": "regex", "pattern": entry}
    if not isinstance(entry, dict):
        raise SpecError(f"set {name!r}: expected an object, a word list or a pattern")
    kind = entry.get("kind")
    try:
        if kind == "finite":
            words = entry.get("words")
            if not isinstance(words, list) or not all(isinstance(w, str) for w in words):
                raise SpecError(f"set {name!r}: 'words' must be a list of strings")
            return Language.from_words(alphabet, words)
        if kind == "regex":
            pattern = entry.get("pattern")
            if not isinstance(pattern, str):
                raise SpecError(f"set {name!r}: 'pattern' must be a string")
            return Language.from_regex(pattern, alphabet)
    except SpecError:
        raise
    except AltCodesError as exc:
        raise SpecError(f"set {name!r}: {exc}") from exc
    raise SpecError(f"set {name!r}: kind must be 'finite' or 'regex', got {kind!r}")


def load_spec(data) -> Spec:
    if not isinstance(data, dict):
        raise SpecError("spec must be a JSON object")
    symbols = data.get("alphabet", "ab")
    try:
        alphabet = Alphabet(symbols)
    except ValueError as exc:
        raise SpecError(f"alphabet: {exc}") from exc
    sets = data.get("sets", {})
    if not isinstance(sets, dict):
        raise SpecError("'sets' must be an object")
    params = data.get("params", {})
    if not isinstance(params, dict):
        raise SpecError("'params' must be an object")
    task = data.get("task")
    if task is not None and task not in TASKS:
        raise SpecError(f"unknown task {task!r}")
    parsed = {name: _parse_set(name, entry, alphabet) for name, entry in sorted(sets.items())}
    return Spec(alphabet, parsed, task, params)


# -- tasks --------------------------------------------------------------------

def _choice(params, key, options, default):
    value = params.get(key, default)
    if value not in options:
        raise SpecError(f"params.{key} must be one of {list(options)}, got {value!r}")
    return value


def task_classify(spec: Spec, bound: int, emit: str) -> dict:
    name, x = spec.target()
    rep = classify(x)
    return {"target": name, **report.classes(rep, emit)}


def task_is_code(spec: Spec, bound: int, emit: str) -> dict:
    name, x = spec.target()
    return {"target": name, **report.sardinas(is_code(x), emit)}


def task_rsic(spec: Spec, bound: int, emit: str) -> dict:
    name, z = spec.target()
    result = rsic(z, exhaustive=bool(spec.params.get("exhaustive", False)))
    out = {"target": name, **report.rsic(result, emit)}
    if result.strong:
        out["subclasses"] = report.subclasses(subclass_characterize(result.x, result.y))
    return out


def task_complete(spec: Spec, bound: int, emit: str) -> dict:
    name, x = spec.target()
    cls = _choice(spec.params, "class", ("prefix", "suffix", "bifix"), "prefix")
    method = _choice(spec.params, "method", ("auto", "finite", "regular", "bounded"), "auto")
    if cls == "bifix":
        if method not in ("auto", "bounded"):
            raise SpecError("bifix completion only supports method 'bounded'")
        result = complete_bifix_bounded(x, bound)
    else:
        table = {
            "prefix": {"auto": complete_prefix, "finite": complete_prefix_finite, "regular": complete_prefix_regular},
            "suffix": {"auto": complete_suffix, "finite": complete_suffix_finite, "regular": complete_suffix_regular},
        }
        if method == "bounded":
            raise SpecError(f"{cls} completion has no bounded method")
        result = table[cls][method](x)
    return {"target": name, "bound": bound, **report.completion(result)}


def _witness_from_params(spec: Spec) -> tuple[dict, tuple[Language, Language]]:
    params = spec.params
    if "x" in params or "y" in params:
        names = {"x": params.get("x"), "y": params.get("y")}
        return names, (spec.get(names["x"]), spec.get(names["y"]))
    name, z = spec.target()
    result = rsic(z)
    if not result.strong:
        raise ClassViolation(f"set {name!r} is not strong alt-induced; no witness to embed")
    return {"z": name}, result.witness


def task_embed(spec: Spec, bound: int, emit: str) -> dict:
    cls = _choice(spec.params, "class", EMBED_CLASSES, "prefix")
    source, wit = _witness_from_params(spec)
    cands = spec.params.get("candidates", {}) or {}
    if not isinstance(cands, dict):
        raise SpecError("params.candidates must be an object with optional keys x, y")
    cand = tuple(spec.get(cands[k]) if cands.get(k) is not None else None for k in ("x", "y"))
    result = embed_strong(wit, cls, cand, bound)
    out = {"source": source, "bound": bound, **report.embedding(result)}
    if emit == "trace":
        out["witness"] = {"X": report.language(wit[0]), "Y": report.language(wit[1])}
    return out


def _container_check(x: Language, cand: Language, cls: str) -> dict:
    if cls == "bifix":
        return report.container(verify_bifix_container(x, cand))
    has_side = is_prefix_code if cls == "prefix" else is_suffix_code
    maximal = is_maximal_prefix if cls == "prefix" else is_maximal_suffix
    if not ops.subset(x, cand):
        return {"ok": False, "reason": "candidate does not contain X"}
    if cand.is_empty or cand.contains_epsilon or not has_side(cand):
        return {"ok": False, "reason": f"candidate is not a {cls} code"}
    if not maximal(cand):
        return {"ok": False, "reason": f"candidate is not a maximal {cls} code"}
    return {"ok": True, "reason": ""}


def task_verify(spec: Spec, bound: int, emit: str) -> dict:
    params = spec.params
    if "candidate" in params:
        cls = _choice(params, "class", ("prefix", "suffix", "bifix"), "bifix")
        name, x = spec.target()
        cand = spec.get(params["candidate"])
        return {"mode": "container", "target": name, "candidate": params["candidate"],
                "class": cls, **_container_check(x, cand, cls)}
    if "x" not in params or "y" not in params:
        raise SpecError("verify needs params.x and params.y, or params.candidate")
    x, y = spec.get(params["x"]), spec.get(params["y"])
    z = spec.get(params["z"]) if "z" in params else ops.concat(x, y)
    rep = verify_witness(x, y, z)
    out = {"mode": "witness", **report.witness(rep)}
    if rep.valid:
        out["subclasses"] = report.subclasses(subclass_characterize(x, y))
    return out


GRIDS = ("rsic", "flags", "unambiguity", "code")


def task_oracle_grid(spec: Spec, bound: int, emit: str) -> dict:
    params = spec.params
    which = _choice(params, "criterion", GRIDS + ("all",), "all")
    size = int(params.get("max_size", 2))
    length = int(params.get("max_len", 2))
    limit = params.get("limit")
    limit = None if limit is None else int(limit)
    a = spec.alphabet
    tallies = []
    if which in ("rsic", "all"):
        tallies.append(validation.rsic_grid(a, size, length, limit))
    if which in ("flags", "all"):
        tallies.extend(validation.class_flag_grid(a, size, length, limit))
    if which in ("unambiguity", "all"):
        tallies.append(validation.unambiguity_grid(a, size, length, limit))
    if which in ("code", "all"):
        tallies.append(validation.code_grid(a, size, length, limit))
    return {
        "max_size": size,
        "max_len": length,
        "limit": limit,
        "ok": all(t.ok for t in tallies),
        "grids": [t.as_dict() for t in tallies],
    }


HANDLERS = {
    "classify": task_classify,
    "is-code": task_is_code,
    "rsic": task_rsic,
    "complete": task_complete,
    "embed": task_embed,
    "verify": task_verify,
    "oracle-grid": task_oracle_grid,
}


def run(data, task: str | None = None, bound: int | None = None, emit: str | None = None,
        timing: bool = False) -> dict:
    """Run the analysis described by a spec (parsed JSON) and return the report."""
    spec = load_spec(data)
    if task is None:
        task = spec.task
    elif spec.task is not None and spec.task != task:
        raise SpecError(f"spec declares task {spec.task!r} but {task!r} was requested")
    if task is None:
        raise SpecError("no task given")
    if bound is None:
        bound = spec.params.get("bound", DEFAULT_BOUND)
    if not isinstance(bound, int) or bound < 0:
        raise SpecError(f"bound must be a non-negative integer, got {bound!r}")
    if emit is None:
        emit = spec.params.get("emit", "trace" if task == "rsic" else "summary")
    if emit not in ("trace", "summary"):
        raise SpecError(f"emit must be 'trace' or 'summary', got {emit!r}")
    started = time.perf_counter()
    result = HANDLERS[task](spec, bound, emit)
    out = {
        "schema_version": report.SCHEMA_VERSION,
        "task": task,
        "alphabet": list(spec.alphabet.symbols),
        "inputs": {name: report.language(lang) for name, lang in spec.sets.items()},
        "result": result,
    }
    if timing:
        out["timing_seconds"] = round(time.perf_counter() - started, 6)
    return out


def _read_input(path: str | None):
    if path is None:
        return {}
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise SpecError(f"cannot read {path}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(f"{path}: invalid JSON: {exc}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="altcodes", description="Code-class decisions and strong alt-induced codes for regular languages."
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in TASKS + ("run",):
        p = sub.add_parser(name, help="run the task named in the input file" if name == "run" else f"{name} task")
        p.add_argument("--input", "-i", default=None if name == "oracle-grid" else "-",
                       help="spec file (JSON); '-' reads standard input")
        p.add_argument("--output", "-o", default="-", help="report file; '-' writes standard output")
        p.add_argument("--bound", type=int, default=None, help=f"search bound (default {DEFAULT_BOUND})")
        p.add_argument("--emit", choices=("trace", "summary"), default=None)
        p.add_argument("--timing", action="store_true", help="include wall-clock time in the report")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    task = None if args.command == "run" else args.command
    try:
        data = _read_input(args.input)
        out = report.dumps(run(data, task, args.bound, args.emit, args.timing))
    except AltCodesError as exc:
        err = {"schema_version": report.SCHEMA_VERSION, "error": {"type": type(exc).__name__, "message": str(exc)}}
        sys.stderr.write(report.dumps(err))
        return 2 if isinstance(exc, SpecError) else 1
    if args.output == "-":
        sys.stdout.write(out)
    else:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
