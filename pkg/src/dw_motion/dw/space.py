"""DW vector spaces and mapping-class permutation representations."""

from typing import NamedTuple

from dw_motion.dw.permutations import PermutationRep
from dw_motion.errors import VerificationError
from dw_motion.groups.finite import FiniteGroup
from dw_motion.homs.classes import HomClass, act, class_lookup, classes
from dw_motion.homs.enumerate import enumerate_homs
from dw_motion.presentation.fp import Endomorphism, Presentation

TRIVIAL_CLASS = 0


class DWSpace(NamedTuple):
    """V_G(Y) with basis the conjugation classes of Hom(π₁Y, G)."""

    presentation: Presentation
    group: FiniteGroup
    basis: list[HomClass]

    @property
    def dimension(self) -> int:
        return len(self.basis)


def dw_space(
    presentation: Presentation,
    group: FiniteGroup,
    max_workers: int | None = 1,
    verbose: bool = False,
) -> DWSpace:
    """Basis of V_G(Y) from the hom classes of π₁(Y) into G."""
    homs = enumerate_homs(presentation, group, max_workers=max_workers, verbose=verbose)
    basis = classes(homs, group)
    if verbose:
        print(f"  dim V_{group.name} = {len(basis)}")
    return DWSpace(presentation, group, basis)


def mcg_rep(
    space: DWSpace, generators: dict[str, Endomorphism]
) -> PermutationRep:
    """
    Permutation action of named mapping classes on a DW space basis.

    For a presentation P of π₁(Y) and a group G, pass the space built by
    dw_space(P, G); the result is the action of the mapping classes of Y on
    V_G(Y). Each class [ρ] is sent to [ρ∘f^-1].

    Args:
        space: DW space to act on, as returned by dw_space(P, G)
        generators: Named endomorphisms of π₁(Y)

    Returns:
        PermutationRep keyed by generator name

    Raises:
        EndomorphismError: If some generator does not act bijectively
        VerificationError: If the trivial class is not fixed
    """
    lookup = class_lookup(space.basis, space.group)
    perms = {}
    for name, e in generators.items():
        perm = act(e, space.presentation, space.basis, space.group, lookup)
        if perm and perm[TRIVIAL_CLASS] != TRIVIAL_CLASS:
            raise VerificationError(f"Generator {name} moves the trivial class")
        perms[name] = perm
    return PermutationRep(space.dimension, perms, tuple(generators))
