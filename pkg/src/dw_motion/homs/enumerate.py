"""Depth-first enumeration of Hom(π, G) for a finitely presented π."""

import itertools
import time
from concurrent.futures import ThreadPoolExecutor, as_completed

from dw_motion.groups.finite import IDENTITY, FiniteGroup
from dw_motion.presentation.fp import Presentation
from dw_motion.presentation.words import Letter, Word

Hom = tuple[int, ...]  # Image of each generator, in generator order


def evaluate(group: FiniteGroup, hom: Hom, word: Word) -> int:
    """Image of a word under a homomorphism given by generator images."""
    table, inverses = group.table, group.inverses
    result = IDENTITY
    for gen, exp in word.letters:
        image = hom[gen]
        result = table[result][image if exp > 0 else inverses[image]]
    return result


def satisfies_relators(
    group: FiniteGroup, hom: Hom, presentation: Presentation
) -> bool:
    return all(evaluate(group, hom, r) == IDENTITY for r in presentation.relators)


def _checks_by_level(presentation: Presentation) -> list[list[tuple[Letter, ...]]]:
    """Relators grouped by the last generator they use."""
    levels: list[list[tuple[Letter, ...]]] = [[] for _ in range(presentation.rank)]
    for relator in presentation.relators:
        if relator:
            levels[relator.max_generator].append(relator.letters)
    return levels


def _search(
    presentation: Presentation, group: FiniteGroup, prefix: Hom = ()
) -> list[Hom]:
    """All homs extending prefix, in lexicographic order."""
    table, inverses = group.table, group.inverses
    rank, order = presentation.rank, group.order
    levels = _checks_by_level(presentation)
    images = list(prefix) + [IDENTITY] * (rank - len(prefix))
    found: list[Hom] = []

    def level_holds(k: int) -> bool:
        for letters in levels[k]:
            x = IDENTITY
            for gen, exp in letters:
                image = images[gen]
                x = table[x][image if exp > 0 else inverses[image]]
            if x != IDENTITY:
                return False
        return True

    def visit(k: int) -> None:
        if k == rank:
            found.append(tuple(images))
            return
        for g in range(order):
            images[k] = g
            if level_holds(k):
                visit(k + 1)

    if all(level_holds(k) for k in range(len(prefix))):
        visit(len(prefix))
    return found


def enumerate_homs(
    presentation: Presentation,
    group: FiniteGroup,
    max_workers: int | None = 1,
    verbose: bool = False,
) -> list[Hom]:
    """
    Enumerate every homomorphism from a presented group into G.

    Generators are assigned in index order and each relator is checked as
    soon as its last generator has an image.

    Args:
        presentation: Source group presentation
        group: Target finite group
        max_workers: Parallel workers (1 = sequential, None = all cores).
            Work is split by the image of the first generator.
        verbose: Print progress information

    Returns:
        All relator-satisfying image tuples in lexicographic order. A
        presentation with no generators has exactly one (empty) hom.
    """
    start = time.perf_counter()
    if verbose:
        print(
            f"Enumerating Hom(<{presentation.rank} gens | "
            f"{len(presentation.relators)} rels>, {group.name})..."
        )

    if max_workers == 1 or presentation.rank == 0:
        homs = _search(presentation, group)
    else:
        parts: dict[int, list[Hom]] = {}
        with ThreadPoolExecutor(max_workers=max_workers) as executor:
            future_to_first = {
                executor.submit(_search, presentation, group, (g,)): g
                for g in range(group.order)
            }
            for future in as_completed(future_to_first):
                try:
                    parts[future_to_first[future]] = future.result()
                except Exception:
                    for f in future_to_first:
                        f.cancel()
                    raise
        homs = [h for g in range(group.order) for h in parts[g]]

    if verbose:
        elapsed = time.perf_counter() - start
        print(f"  Found {len(homs):,} homomorphisms in {elapsed:.2f}s")
    return homs


def brute_force_homs(presentation: Presentation, group: FiniteGroup) -> list[Hom]:
    """Filter all |G|^rank tuples; an independent oracle for enumerate_homs."""
    return [
        hom
        for hom in itertools.product(range(group.order), repeat=presentation.rank)
        if satisfies_relators(group, hom, presentation)
    ]
