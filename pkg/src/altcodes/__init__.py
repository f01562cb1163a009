"""Codes, strong alt-induced codes and maximal embeddings for regular languages."""
from .alphabet import Alphabet
from .altinduced import (
    RsicResult,
    SubclassReport,
    WitnessReport,
    product_compose,
    rsic,
    subclass_characterize,
    verify_witness,
)
from .bifix import complete_bifix_bounded, fullness_probe, indicator, interpretations, verify_bifix_container
from .codes import (
    classify,
    infix_family,
    is_alternative_code,
    is_bifix_code,
    is_code,
    is_complete_code,
    is_prefix_code,
    is_strong_alternative_code,
    is_suffix_code,
    is_thin,
    is_unambiguous_product,
)
from .embed import EmbedResult, embed_strong
from .errors import AltCodesError
from .language import Language, enumerate_words, regex_string, shortest_word
from .maximal import (
    CompletionResult,
    complete_prefix,
    complete_prefix_finite,
    complete_prefix_regular,
    complete_suffix,
    is_maximal_bifix,
    is_maximal_prefix,
    is_maximal_suffix,
)
from .regex import parse_regex

__version__ = "0.1.0"

__all__ = [
    "AltCodesError",
    "Alphabet",
    "CompletionResult",
    "EmbedResult",
    "Language",
    "RsicResult",
    "SubclassReport",
    "WitnessReport",
    "classify",
    "complete_bifix_bounded",
    "complete_prefix",
    "complete_prefix_finite",
    "complete_prefix_regular",
    "complete_suffix",
    "embed_strong",
    "enumerate_words",
    "fullness_probe",
    "indicator",
    "infix_family",
    "interpretations",
    "is_alternative_code",
    "is_bifix_code",
    "is_code",
    "is_complete_code",
    "is_maximal_bifix",
    "is_maximal_prefix",
    "is_maximal_suffix",
    "is_prefix_code",
    "is_strong_alternative_code",
    "is_suffix_code",
    "is_thin",
    "is_unambiguous_product",
    "parse_regex",
    "product_compose",
    "regex_string",
    "rsic",
    "shortest_word",
    "subclass_characterize",
    "verify_bifix_container",
    "verify_witness",
]
