"""JSON-ready views of analysis results.

Every language is emitted as a regex (parseable by ``parse_regex``) and, when
finite and small, as a sorted word list.  Keys and lists are ordered so that
the same input always serializes to the same bytes.
"""
from __future__ import annotations

import json

from .altinduced import RsicResult, SubclassReport, WitnessReport
from .bifix import ContainerCheck, FullnessReport
from .codes import CodeClassReport, ProductCheck, SardinasTrace
from .embed import EmbedResult
from .language import Language, regex_string
from .maximal import CompletionResult

SCHEMA_VERSION = 1
WORD_LIST_LIMIT = 1000


def language(lang: Language) -> dict:
    out = {
        "regex": regex_string(lang),
        "finite": lang.is_finite,
        "states": lang.size,
    }
    if lang.contains_epsilon:
        out["contains_epsilon"] = True
    if lang.is_finite and lang.count_words() <= WORD_LIST_LIMIT:
        out["words"] = lang.sorted_words()
    return out


def sardinas(trace: SardinasTrace, emit: str = "summary") -> dict:
    out = {"verdict": trace.verdict, "code": trace.code, "rounds": len(trace.rounds)}
    if not trace.code:
        out["witness"] = trace.witness
        out["factorizations"] = [list(f) for f in trace.factorizations]
    if emit == "trace":
        out["trace"] = [language(r) for r in trace.rounds]
    return out


def classes(rep: CodeClassReport, emit: str = "summary") -> dict:
    out = {"classes": rep.as_dict()}
    if rep.sardinas is not None:
        out["sardinas_patterson"] = sardinas(rep.sardinas, emit)
    return out


def rsic(result: RsicResult, emit: str = "trace") -> dict:
    out = {
        "verdict": result.verdict,
        "shortest_word": result.shortest,
        "witness": None if not result.strong else {"X": language(result.x), "Y": language(result.y)},
    }
    if emit == "trace":
        steps = []
        for step in result.trace:
            entry = {"u": step.u, "Y": language(step.y), "outcome": step.outcome}
            if step.y_word is not None:
                entry["y"] = step.y_word
                entry["X"] = language(step.x)
            steps.append(entry)
        out["trace"] = steps
    return out


def completion(result: CompletionResult) -> dict:
    return {
        "class": result.cls,
        "method": result.method,
        "container": language(result.container),
        "preserved_max_length": result.preserved_maxlen,
    }


def embedding(result: EmbedResult) -> dict:
    return {"class": result.cls, "M_X": completion(result.x), "M_Y": completion(result.y)}


def witness(rep: WitnessReport) -> dict:
    return rep.as_dict()


def subclasses(rep: SubclassReport) -> dict:
    return rep.as_dict()


def container(check: ContainerCheck) -> dict:
    return {"ok": check.ok, "reason": check.reason}


def product(check: ProductCheck) -> dict:
    return {"unambiguous": check.unambiguous, "witness": check.witness}


def fullness(rep: FullnessReport) -> dict:
    return {
        "max_length": rep.maxlen,
        "full_counts": {str(k): v for k, v in sorted(rep.full_counts.items())},
        "interpretation_counts": {str(k): list(v) for k, v in sorted(rep.interpretation_counts.items())},
        "uniform_degree": rep.uniform_degree,
        "examples": {str(k): v for k, v in sorted(rep.examples.items())},
    }


def dumps(report: dict) -> str:
    return json.dumps(report, indent=2, ensure_ascii=False) + "\n"
