"""Link families and the fundamental groups of their complements."""

import math
import re
from typing import NamedTuple

from dw_motion.errors import LinkSpecError
from dw_motion.homs.labeled import BoundaryComponent
from dw_motion.presentation.fp import Presentation
from dw_motion.presentation.words import Word, commutator, power, product

_LINK_SPEC = re.compile(r"^(torus|necklace|hopf):(\d+(?:,\d+)*)$")


class TorusLink(NamedTuple):
    """n parallel copies of the (p, q) torus knot."""

    p: int
    q: int
    n: int


class Necklace(NamedTuple):
    """n unknotted rings threaded on an unknotted axis."""

    n: int


class HopfLinks(NamedTuple):
    """n Hopf-fibre circles around a core circle used as the axis."""

    n: int


LinkFamily = TorusLink | Necklace | HopfLinks


class LinkGroup(NamedTuple):
    """π₁ of a link complement with peripheral words per component."""

    presentation: Presentation
    boundary: list[BoundaryComponent]  # One entry per component
    component_names: list[str]  # L1..Ln, plus Lc for an axis


def validate_link(link: LinkFamily) -> None:
    """Raise LinkSpecError for parameters outside the family's range."""
    if isinstance(link, TorusLink):
        if link.p < 1 or link.q < 1 or link.n < 1:
            raise LinkSpecError(f"Torus link needs p, q, n >= 1, got {link}")
        if math.gcd(link.p, link.q) != 1:
            raise LinkSpecError(f"Torus link needs gcd(p, q) = 1, got {link}")
    elif link.n < 1:
        raise LinkSpecError(f"{type(link).__name__} needs n >= 1, got {link}")


def parse_link_spec(text: str) -> LinkFamily:
    """
    Parse ``torus:p,q,n``, ``necklace:n`` or ``hopf:n``.

    Raises:
        LinkSpecError: On malformed text or invalid parameters
    """
    match = _LINK_SPEC.match(text.strip())
    if not match:
        raise LinkSpecError(
            f"Unknown link spec {text!r} (expected torus:p,q,n, necklace:n or hopf:n)"
        )
    kind = match.group(1)
    values = [int(v) for v in match.group(2).split(",")]
    expected = 3 if kind == "torus" else 1
    if len(values) != expected:
        raise LinkSpecError(f"{kind} link spec takes {expected} parameter(s)")

    link: LinkFamily
    if kind == "torus":
        link = TorusLink(*values)
    elif kind == "necklace":
        link = Necklace(values[0])
    else:
        link = HopfLinks(values[0])
    validate_link(link)
    return link


def format_link_spec(link: LinkFamily) -> str:
    if isinstance(link, TorusLink):
        return f"torus:{link.p},{link.q},{link.n}"
    if isinstance(link, Necklace):
        return f"necklace:{link.n}"
    return f"hopf:{link.n}"


def torus_u(n: int, i: int) -> Word:
    """u_i as a word, with u_0 = y and u_n = x (generators x, y, u_1..u_{n-1})."""
    if i == 0:
        return Word.generator(1)
    if i == n:
        return Word.generator(0)
    return Word.generator(1 + i)


def torus_meridian(n: int, i: int) -> Word:
    """Meridian of component i: u_{i-1} u_i^-1."""
    return torus_u(n, i - 1) * power(torus_u(n, i), -1)


def _torus_link_group(link: TorusLink) -> LinkGroup:
    p, q, n = link
    names = ("x", "y") + tuple(f"u{i}" for i in range(1, n))
    x, y = Word.generator(0), Word.generator(1)
    y_q = power(y, q)
    relators = [power(x, p) * power(y, -q)]
    relators += [commutator(y_q, torus_u(n, i)) for i in range(1, n)]
    boundary = [
        BoundaryComponent(torus_meridian(n, i), power(x, p)) for i in range(1, n + 1)
    ]
    return LinkGroup(
        Presentation(names, tuple(relators)),
        boundary,
        [f"L{i}" for i in range(1, n + 1)],
    )


def _axis_link_group(n: int, axis_name: str) -> LinkGroup:
    """⟨a, x_1..x_n | [a, x_i]⟩ with each x_i linking the axis a once."""
    names = (axis_name,) + tuple(f"x{i}" for i in range(1, n + 1))
    a = Word.generator(0)
    xs = [Word.generator(i) for i in range(1, n + 1)]
    relators = tuple(commutator(a, x_i) for x_i in xs)
    boundary = [BoundaryComponent(x_i, a) for x_i in xs]
    boundary.append(BoundaryComponent(a, product(xs)))
    return LinkGroup(
        Presentation(names, relators),
        boundary,
        [f"L{i}" for i in range(1, n + 1)] + ["Lc"],
    )


def pi1(link: LinkFamily) -> LinkGroup:
    """
    Presentation of π₁(S³ ∖ L) with meridian and longitude words.

    Torus links use generators x, y, u_1..u_{n-1} with relators x^p y^-q and
    [y^q, u_i]; every component has longitude x^p. Necklaces use the axis
    generator x and ring generators x_1..x_n; the n-Hopf links name the axis
    generator y instead. In both axis families the last component is the axis,
    with meridian the axis generator and longitude x_1 ⋯ x_n.

    Raises:
        LinkSpecError: If the link parameters are invalid
    """
    validate_link(link)
    if isinstance(link, TorusLink):
        return _torus_link_group(link)
    if isinstance(link, Necklace):
        return _axis_link_group(link.n, "x")
    return _axis_link_group(link.n, "y")
