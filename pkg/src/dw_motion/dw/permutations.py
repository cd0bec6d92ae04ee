"""Permutation representations and their generated groups."""

from collections.abc import Iterable
from typing import NamedTuple

from sympy.combinatorics import Permutation as SympyPermutation
from sympy.combinatorics import PermutationGroup

from dw_motion.homs.classes import Permutation, invert_permutation
from dw_motion.presentation.words import Word


class PermutationRep(NamedTuple):
    """Named generators acting by permutations on a basis of size dimension."""

    dimension: int  # Number of basis vectors
    generators: dict[str, Permutation]  # Generator name → permutation
    generator_order: tuple[str, ...]  # Names in presentation order


def identity_permutation(size: int) -> Permutation:
    return tuple(range(size))


def compose_permutations(first: Permutation, second: Permutation) -> Permutation:
    """first ∘ second as functions: k ↦ first[second[k]]."""
    return tuple(first[k] for k in second)


def evaluate_word(
    rep: PermutationRep, word: Word, names: tuple[str, ...] | None = None
) -> Permutation:
    """Permutation P(s_1) ∘ ... ∘ P(s_k) for the word s_1 ... s_k.

    Letters are read against ``names`` (default: the rep's generator order).
    """
    names = rep.generator_order if names is None else names
    result = identity_permutation(rep.dimension)
    for gen, exp in word.letters:
        perm = rep.generators[names[gen]]
        step = perm if exp > 0 else invert_permutation(perm)
        result = compose_permutations(result, step)
    return result


def is_identity(perm: Permutation) -> bool:
    return all(k == image for k, image in enumerate(perm))


def permutation_group(perms: Iterable[Permutation], size: int) -> PermutationGroup:
    """sympy group generated by the given permutations of range(size)."""
    generators = [SympyPermutation(list(p), size=size) for p in perms]
    if not generators:
        generators = [SympyPermutation(list(range(size)), size=size)]
    return PermutationGroup(generators)


def image_order(rep: PermutationRep) -> int:
    """Order of the permutation group generated by the rep's generators."""
    if rep.dimension == 0:
        return 1
    return int(permutation_group(rep.generators.values(), rep.dimension).order())


def groups_equal(
    first: Iterable[Permutation], second: Iterable[Permutation], size: int
) -> bool:
    """True if both permutation sets generate the same group."""
    if size == 0:
        return True
    a = permutation_group(first, size)
    b = permutation_group(second, size)
    return all(b.contains(g) for g in a.generators) and all(
        a.contains(g) for g in b.generators
    )


def cycle_string(perm: Permutation) -> str:
    """Cycle notation on 0-based points, '()' for the identity."""
    if not perm:
        return "()"
    cycles = SympyPermutation(list(perm)).cyclic_form
    if not cycles:
        return "()"
    return "".join("(" + " ".join(str(k) for k in cycle) + ")" for cycle in cycles)
