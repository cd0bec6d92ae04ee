"""Finitely presented groups and endomorphisms given by generator images."""

from dataclasses import dataclass

from dw_motion.presentation.words import Word, inverse


@dataclass(frozen=True)
class Presentation:
    """⟨generators | relators⟩; each relator is declared equal to the identity."""

    generator_names: tuple[str, ...]
    relators: tuple[Word, ...] = ()

    def __post_init__(self) -> None:
        if len(set(self.generator_names)) != len(self.generator_names):
            raise ValueError(f"Duplicate generator names: {self.generator_names}")
        for relator in self.relators:
            if relator.max_generator >= self.rank:
                raise ValueError(
                    f"Relator uses generator {relator.max_generator}, "
                    f"presentation has {self.rank}"
                )

    @property
    def rank(self) -> int:
        return len(self.generator_names)

    def generator(self, name: str) -> Word:
        """The one-letter word for a named generator."""
        return Word.generator(self.generator_names.index(name))

    def fresh_name(self, base: str) -> str:
        """A generator name not used yet, starting from base."""
        name, k = base, 1
        while name in self.generator_names:
            name, k = f"{base}{k}", k + 1
        return name


@dataclass(frozen=True)
class Endomorphism:
    """Generator g ↦ images[g]; relator preservation is checked semantically."""

    images: tuple[Word, ...]

    def __post_init__(self) -> None:
        rank = len(self.images)
        for image in self.images:
            if image.max_generator >= rank:
                raise ValueError(
                    f"Image uses generator {image.max_generator}, source has {rank}"
                )

    @classmethod
    def identity(cls, rank: int) -> "Endomorphism":
        return cls(tuple(Word.generator(g) for g in range(rank)))

    @property
    def rank(self) -> int:
        return len(self.images)

    def extended(self, extra: int) -> "Endomorphism":
        """Extend by fixing ``extra`` new generators appended after the old ones."""
        fixed = tuple(Word.generator(self.rank + k) for k in range(extra))
        return Endomorphism(self.images + fixed)


def substitute(w: Word, e: Endomorphism) -> Word:
    """Image of w under e, freely reduced."""
    letters = []
    for gen, exp in w.letters:
        image = e.images[gen]
        letters.extend(image.letters if exp > 0 else inverse(image).letters)
    return Word(tuple(letters))


def compose(e1: Endomorphism, e2: Endomorphism) -> Endomorphism:
    """e1 ∘ e2: generator g ↦ substitute(e2(g), e1)."""
    if e1.rank != e2.rank:
        raise ValueError(f"Cannot compose endomorphisms of rank {e1.rank}, {e2.rank}")
    return Endomorphism(tuple(substitute(image, e1) for image in e2.images))


def compose_all(endomorphisms: list[Endomorphism], rank: int) -> Endomorphism:
    """e_1 ∘ e_2 ∘ ... ∘ e_k (identity for an empty list)."""
    result = Endomorphism.identity(rank)
    for e in endomorphisms:
        result = compose(result, e)
    return result
