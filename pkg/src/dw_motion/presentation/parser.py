"""Text formats for presentations and endomorphisms.

Presentation file::

    # comment
    gens: x y
    rel: x^3 y^-2

Endomorphism file (missing generators map to themselves)::

    x = x y
    y =
"""

import re

from dw_motion.errors import PresentationSyntaxError
from dw_motion.presentation.fp import Endomorphism, Presentation
from dw_motion.presentation.words import Word, run_length_tokens, word_from_tokens

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*$")
_TOKEN = re.compile(r"([A-Za-z_][A-Za-z0-9_]*)(?:\^(-?\d+))?$")


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0].rstrip()


def _tokens_with_columns(text: str, offset: int) -> list[tuple[str, int]]:
    """Whitespace-separated tokens with 1-based columns."""
    return [(m.group(), offset + m.start() + 1) for m in re.finditer(r"\S+", text)]


def parse_word(
    text: str, names: tuple[str, ...], line: int = 1, offset: int = 0
) -> Word:
    """Parse a product of ``name`` / ``name^k`` tokens.

    Raises:
        PresentationSyntaxError: Unknown generator, bad token or zero exponent
    """
    index = {name: g for g, name in enumerate(names)}
    tokens = []
    for token, column in _tokens_with_columns(text, offset):
        match = _TOKEN.match(token)
        if match is None:
            raise PresentationSyntaxError(f"bad token {token!r}", line, column)
        name, exponent = match.group(1), match.group(2)
        if name not in index:
            raise PresentationSyntaxError(f"unknown generator {name!r}", line, column)
        k = 1 if exponent is None else int(exponent)
        if k == 0:
            raise PresentationSyntaxError("exponent must be nonzero", line, column)
        tokens.append((index[name], k))
    return word_from_tokens(tokens)


def format_word(w: Word, names: tuple[str, ...]) -> str:
    parts = []
    for gen, k in run_length_tokens(w):
        parts.append(names[gen] if k == 1 else f"{names[gen]}^{k}")
    return " ".join(parts)


def parse_presentation(text: str) -> Presentation:
    """
    Parse the presentation file format.

    Args:
        text: File contents; ``gens:`` must be the first non-comment line

    Returns:
        Presentation with relators in file order

    Raises:
        PresentationSyntaxError: With the offending line and column
    """
    names: tuple[str, ...] | None = None
    relators: list[Word] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line.strip():
            continue
        key, sep, body = line.partition(":")
        key = key.strip()
        offset = line.find(":") + 1
        if not sep or key not in ("gens", "rel"):
            column = len(raw) - len(raw.lstrip()) + 1
            raise PresentationSyntaxError(
                "expected 'gens:' or 'rel:'", lineno, column
            )
        if key == "gens":
            if names is not None:
                raise PresentationSyntaxError("duplicate 'gens:' line", lineno, 1)
            found = _tokens_with_columns(body, offset)
            for name, column in found:
                if not _NAME.match(name):
                    raise PresentationSyntaxError(
                        f"bad generator name {name!r}", lineno, column
                    )
            names = tuple(name for name, _ in found)
            if len(set(names)) != len(names):
                raise PresentationSyntaxError("duplicate generator name", lineno, 1)
        else:
            if names is None:
                raise PresentationSyntaxError("'rel:' before 'gens:'", lineno, 1)
            relators.append(parse_word(body, names, lineno, offset))
    if names is None:
        raise PresentationSyntaxError("missing 'gens:' line", 1, 1)
    return Presentation(names, tuple(relators))


def format_presentation(presentation: Presentation) -> str:
    """Serialize in the format read by parse_presentation."""
    names = presentation.generator_names
    lines = ["gens: " + " ".join(names) if names else "gens:"]
    for relator in presentation.relators:
        body = format_word(relator, names)
        lines.append(f"rel: {body}" if body else "rel:")
    return "\n".join(lines) + "\n"


def parse_endomorphism(text: str, presentation: Presentation) -> Endomorphism:
    """Parse ``gen = tokens`` lines against a presentation's generators.

    Raises:
        PresentationSyntaxError: Unknown or repeated generator, bad tokens
    """
    names = presentation.generator_names
    images: dict[int, Word] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line.strip():
            continue
        lhs, sep, rhs = line.partition("=")
        name = lhs.strip()
        column = len(lhs) - len(lhs.lstrip()) + 1
        if not sep:
            raise PresentationSyntaxError("expected 'gen = word'", lineno, column)
        if name not in names:
            raise PresentationSyntaxError(
                f"unknown generator {name!r}", lineno, column
            )
        gen = names.index(name)
        if gen in images:
            raise PresentationSyntaxError(f"{name!r} mapped twice", lineno, column)
        images[gen] = parse_word(rhs, names, lineno, len(lhs) + 1)
    return Endomorphism(
        tuple(images.get(g, Word.generator(g)) for g in range(presentation.rank))
    )


def format_endomorphism(e: Endomorphism, presentation: Presentation) -> str:
    names = presentation.generator_names
    lines = []
    for gen, image in enumerate(e.images):
        body = format_word(image, names)
        lines.append(f"{names[gen]} = {body}".rstrip())
    return "\n".join(lines) + "\n"
