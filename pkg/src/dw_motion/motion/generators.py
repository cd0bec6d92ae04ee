"""Motion-group generators acting on link groups, and their presentations."""

import itertools
from typing import NamedTuple

from dw_motion.motion.links import (
    LinkFamily,
    Necklace,
    TorusLink,
    torus_meridian,
    torus_u,
    validate_link,
)
from dw_motion.presentation.fp import Endomorphism, compose_all
from dw_motion.presentation.parser import format_word
from dw_motion.presentation.words import Word, commutator, inverse, power, product


class MotionPresentation(NamedTuple):
    """Generators and relators of a motion group."""

    family: str  # odd, even, hopf, necklace or hopf-links
    generator_names: tuple[str, ...]
    relators: tuple[Word, ...]  # Words in generator_names order

    @property
    def relator_names(self) -> list[str]:
        return [format_word(r, self.generator_names) for r in self.relators]


def torus_family(link: TorusLink) -> str:
    """odd when p+q is odd, hopf for (1, 1), even otherwise."""
    if (link.p, link.q) == (1, 1):
        return "hopf"
    return "odd" if (link.p + link.q) % 2 else "even"


def _conjugate(c: Word, w: Word) -> Word:
    return c * w * inverse(c)


def torus_sigma(n: int, i: int) -> Endomorphism:
    """σ_i: u_i ↦ u_{i-1} u_i^-1 u_{i+1}; everything else fixed."""
    images = [Word.generator(g) for g in range(n + 1)]
    images[1 + i] = torus_u(n, i - 1) * inverse(torus_u(n, i)) * torus_u(n, i + 1)
    return Endomorphism(tuple(images))


def torus_r(n: int, i: int) -> Endomorphism:
    """r_i: conjugate u_j (j ≥ i) and x by u_{i-1} u_i^-1; y fixed."""
    c = torus_meridian(n, i)
    images = [Word.generator(g) for g in range(n + 1)]
    for j in range(i, n + 1):
        u = torus_u(n, j)
        images[u.letters[0][0]] = _conjugate(c, u)
    return Endomorphism(tuple(images))


def _axis_sigma(n: int, i: int) -> Endomorphism:
    """σ_i: x_i ↦ x_i x_{i+1} x_i^-1, x_{i+1} ↦ x_i."""
    images = [Word.generator(g) for g in range(n + 1)]
    x_i, x_next = Word.generator(i), Word.generator(i + 1)
    images[i] = _conjugate(x_i, x_next)
    images[i + 1] = x_i
    return Endomorphism(tuple(images))


def _necklace_shift(n: int) -> Endomorphism:
    """p: x_i ↦ x_{i-1 mod n}."""
    images = [Word.generator(0)]
    images += [Word.generator((i - 2) % n + 1) for i in range(1, n + 1)]
    return Endomorphism(tuple(images))


def motion_generators(link: LinkFamily) -> dict[str, Endomorphism]:
    """
    Named generators of the motion group acting on π₁(S³ ∖ L).

    Torus links get s1..s{n-1} and r1..rn, plus r2pi (the composite
    r1 ∘ ... ∘ rn) for the even family. Necklaces get s1..s{n-1} and the
    cyclic shift p; the n-Hopf links get s1..s{n-1} only.

    Raises:
        LinkSpecError: If the link parameters are invalid
    """
    validate_link(link)
    n = link.n
    generators: dict[str, Endomorphism] = {}
    if isinstance(link, TorusLink):
        for i in range(1, n):
            generators[f"s{i}"] = torus_sigma(n, i)
        for i in range(1, n + 1):
            generators[f"r{i}"] = torus_r(n, i)
        if torus_family(link) == "even":
            rs = [generators[f"r{i}"] for i in range(1, n + 1)]
            generators["r2pi"] = compose_all(rs, n + 1)
        return generators

    for i in range(1, n):
        generators[f"s{i}"] = _axis_sigma(n, i)
    if isinstance(link, Necklace):
        generators["p"] = _necklace_shift(n)
    return generators


def _braid_relators(sigmas: list[Word]) -> list[Word]:
    relators = []
    for a, b in itertools.combinations(range(len(sigmas)), 2):
        s, t = sigmas[a], sigmas[b]
        if b == a + 1:
            relators.append(s * t * s * inverse(t * s * t))
        else:
            relators.append(commutator(s, t))
    return relators


def motion_presentation(link: LinkFamily) -> MotionPresentation:
    """
    Relators of the motion group, in the generator order of motion_generators.

    Torus links: braid relations on the s_i, r_i r_k = r_k r_i,
    r_i s_j = s_j r_i for j outside {i-1, i}, and r_1 ⋯ r_n = 1. The even
    family adds r_1 ⋯ r_n = r2pi and r2pi² = 1; the (1, 1) family adds
    r_1 = r_n = 1. Necklaces: braid relations, p^-1 s_i p = s_{i+1} and p^n
    central. The n-Hopf links: braid relations only.
    """
    names = tuple(motion_generators(link))
    gen = {name: Word.generator(k) for k, name in enumerate(names)}
    n = link.n
    sigmas = [gen[f"s{i}"] for i in range(1, n)]
    relators = _braid_relators(sigmas)

    if isinstance(link, TorusLink):
        family = torus_family(link)
        rs = [gen[f"r{i}"] for i in range(1, n + 1)]
        relators += [commutator(a, b) for a, b in itertools.combinations(rs, 2)]
        for i in range(1, n + 1):
            for j in range(1, n):
                if j not in (i - 1, i):
                    relators.append(commutator(rs[i - 1], sigmas[j - 1]))
        relators.append(product(rs))
        if family == "even":
            relators.append(product(rs) * inverse(gen["r2pi"]))
            relators.append(power(gen["r2pi"], 2))
        elif family == "hopf":
            relators.append(rs[0])
            if n > 1:
                relators.append(rs[-1])
        return MotionPresentation(family, names, tuple(relators))

    if isinstance(link, Necklace):
        shift = gen["p"]
        for i in range(n - 2):
            relators.append(
                inverse(shift) * sigmas[i] * shift * inverse(sigmas[i + 1])
            )
        if sigmas:
            relators.append(commutator(power(shift, n), sigmas[0]))
        return MotionPresentation("necklace", names, tuple(relators))

    return MotionPresentation("hopf-links", names, tuple(relators))
