"""Standard surfaces, tori and their mapping-class generators."""

import itertools

import numpy as np

from dw_motion.presentation.fp import Endomorphism, Presentation
from dw_motion.presentation.words import Word, commutator, product

TORUS_NAMES = ("a", "b", "c", "d", "e", "f")

# M(T^3) generators as integer matrices (row i gives the image of generator i)
T3_MATRIX = np.array([[1, 1, 0], [0, 1, 0], [0, 0, 1]])
S3_MATRIX = np.array([[0, 0, 1], [1, 0, 0], [0, 1, 0]])


def circle() -> Presentation:
    """π₁(S¹) = ⟨a | ⟩."""
    return Presentation(("a",))


def sphere() -> Presentation:
    """π₁(S²) = ⟨ | ⟩."""
    return Presentation(())


def torus_power(d: int) -> Presentation:
    """π₁(T^d) = Z^d with all pairwise commutators."""
    if not 1 <= d <= len(TORUS_NAMES):
        raise ValueError(f"T^{d} is not supported")
    gens = [Word.generator(g) for g in range(d)]
    relators = tuple(
        commutator(gens[i], gens[j]) for i, j in itertools.combinations(range(d), 2)
    )
    return Presentation(TORUS_NAMES[:d], relators)


def torus() -> Presentation:
    return torus_power(2)


def endomorphism_from_matrix(matrix: np.ndarray) -> Endomorphism:
    """Endomorphism of Z^d sending generator i to ∏_j g_j^{matrix[i, j]}."""
    m = np.asarray(matrix, dtype=np.int64)
    return Endomorphism(
        tuple(
            product(Word.generator(j, int(m[i, j])) for j in range(m.shape[1]))
            for i in range(m.shape[0])
        )
    )


def torus_s() -> Endomorphism:
    """S: a ↦ b, b ↦ a^-1."""
    return Endomorphism((Word.generator(1), Word.generator(0, -1)))


def torus_t() -> Endomorphism:
    """T: a ↦ ab, b ↦ b."""
    return Endomorphism((Word.generator(0) * Word.generator(1), Word.generator(1)))


STANDARD_SURFACES = {
    "circle": circle,
    "sphere": sphere,
    "torus": torus,
    "t2": torus,
    "t3": lambda: torus_power(3),
}


def surface_presentation(name: str) -> Presentation:
    """Look up a standard surface by name (circle, sphere, torus/t2, t3)."""
    try:
        return STANDARD_SURFACES[name]()
    except KeyError:
        known = ", ".join(sorted(STANDARD_SURFACES))
        raise ValueError(f"Unknown surface {name!r} (known: {known})") from None


def mapping_class_generators(name: str) -> dict[str, Endomorphism]:
    """Named generators of the mapping class group of a standard surface.

    The circle and sphere have no orientation-preserving mapping classes
    beyond the identity, so they get an empty dict.
    """
    if name in ("torus", "t2"):
        return {"S": torus_s(), "T": torus_t()}
    if name == "t3":
        return {
            "S3": endomorphism_from_matrix(S3_MATRIX),
            "T3": endomorphism_from_matrix(T3_MATRIX),
        }
    surface_presentation(name)
    return {}
