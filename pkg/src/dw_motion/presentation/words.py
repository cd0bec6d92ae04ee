"""Words in a free group, stored freely reduced."""

from collections.abc import Iterable
from dataclasses import dataclass

Letter = tuple[int, int]  # (generator index, exponent ±1)


def _reduce(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    stack: list[Letter] = []
    for gen, exp in letters:
        if exp not in (1, -1):
            raise ValueError(f"Letter exponents must be ±1, got {exp}")
        if stack and stack[-1] == (gen, -exp):
            stack.pop()
        else:
            stack.append((gen, exp))
    return tuple(stack)


@dataclass(frozen=True)
class Word:
    """A freely reduced word; construction reduces automatically."""

    letters: tuple[Letter, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "letters", _reduce(self.letters))

    @classmethod
    def generator(cls, gen: int, exponent: int = 1) -> "Word":
        """The word gen^exponent."""
        sign = 1 if exponent >= 0 else -1
        return cls(((gen, sign),) * abs(exponent))

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    @property
    def generators(self) -> frozenset[int]:
        return frozenset(gen for gen, _ in self.letters)

    @property
    def max_generator(self) -> int:
        """Largest generator index used, -1 for the empty word."""
        return max((gen for gen, _ in self.letters), default=-1)


def free_reduce(w: Word) -> Word:
    """Return the freely reduced form of w (idempotent)."""
    return Word(w.letters)


def inverse(w: Word) -> Word:
    return Word(tuple((gen, -exp) for gen, exp in reversed(w.letters)))


def power(w: Word, k: int) -> Word:
    base = w if k >= 0 else inverse(w)
    return Word(base.letters * abs(k))


def commutator(a: Word, b: Word) -> Word:
    """[a, b] = a b a^-1 b^-1."""
    return a * b * inverse(a) * inverse(b)


def product(words: Iterable[Word]) -> Word:
    letters: list[Letter] = []
    for w in words:
        letters.extend(w.letters)
    return Word(tuple(letters))


def word_from_tokens(tokens: Iterable[tuple[int, int]]) -> Word:
    """Build a word from (generator, exponent) tokens such as x^3 y^-2."""
    return product(Word.generator(gen, k) for gen, k in tokens)


def run_length_tokens(w: Word) -> list[tuple[int, int]]:
    """Group consecutive equal letters: x x y^-1 → [(x, 2), (y, -1)]."""
    tokens: list[tuple[int, int]] = []
    for gen, exp in w.letters:
        if tokens and tokens[-1][0] == gen and (tokens[-1][1] > 0) == (exp > 0):
            tokens[-1] = (gen, tokens[-1][1] + exp)
        else:
            tokens.append((gen, exp))
    return tokens
