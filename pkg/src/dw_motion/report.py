"""Deterministic JSON reports emitted by the CLI."""

import hashlib
import json
from collections.abc import Iterable, Mapping
from fractions import Fraction
from pathlib import Path
from typing import Any, NamedTuple

import numpy as np

from dw_motion import __version__

# Choices that fix the basis and the sign of every permutation in a report
CONVENTIONS = {
    "identity": "element index 0 is the identity of every group",
    "element_order": "constructor order: identity first, then canonical order",
    "canonical_form": "a hom class is represented by its lexicographically "
    "minimal image tuple",
    "class_order": "hom classes are sorted by canonical form",
    "act": "act(e)[rho] = [rho o e^-1]; act(e1 o e2) = act(e1) o act(e2)",
    "relator_evaluation": "a word s1...sk evaluates to P(s1) o ... o P(sk)",
    "witness": "a rho(m) a^-1 = g and a rho(l) a^-1 = h for label (g, h)",
    "permutations": "cycle notation on 0-based basis positions",
}


class Report(NamedTuple):
    """A command's result with enough context to reproduce it."""

    command: list[str]  # Argument vector after the program name
    input_digest: str  # sha256 over argv and input file bytes
    result: dict[str, Any]
    version: str
    conventions: dict[str, str]


def input_digest(argv: Iterable[str], files: Iterable[Path] = ()) -> str:
    """sha256 over the NUL-joined arguments followed by every input file."""
    h = hashlib.sha256()
    h.update("\0".join(argv).encode("utf-8"))
    for path in files:
        h.update(b"\0")
        h.update(Path(path).read_bytes())
    return h.hexdigest()


def to_jsonable(value: Any) -> Any:
    """Convert results (NamedTuples, numpy values, Fractions) to JSON types."""
    if isinstance(value, tuple) and hasattr(value, "_asdict"):
        return {k: to_jsonable(v) for k, v in value._asdict().items()}
    if isinstance(value, Mapping):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, np.ndarray):
        return to_jsonable(value.tolist())
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return float(value)
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, complex):
        return {"real": value.real, "imag": value.imag}
    return value


def make_report(
    argv: list[str], result: dict[str, Any], files: Iterable[Path] = ()
) -> Report:
    return Report(
        command=list(argv),
        input_digest=input_digest(argv, files),
        result=to_jsonable(result),
        version=__version__,
        conventions=dict(CONVENTIONS),
    )


def render_report(report: Report) -> str:
    """JSON text with sorted keys and two-space indent, newline-terminated."""
    text = json.dumps(
        to_jsonable(report), sort_keys=True, indent=2, ensure_ascii=False
    )
    return text + "\n"
