"""Words in a finitely generated free group.

A letter is a nonzero integer: ``+(i + 1)`` stands for generator ``i`` and
``-(i + 1)`` for its inverse.  Every constructor freely reduces its input,
so two ``Word`` instances compare equal exactly when they represent the
same element of the free group.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence


def reduce_letters(letters: Iterable[int]) -> tuple[int, ...]:
    stack: list[int] = []
    for x in letters:
        if not isinstance(x, int) or isinstance(x, bool) or x == 0:
            raise ValueError(f"invalid letter {x!r}; letters are nonzero integers")
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return tuple(stack)


class Word:
    """A freely reduced word; immutable and hashable."""

    __slots__ = ("_letters",)

    def __init__(self, letters: Iterable[int] = ()):
        self._letters = reduce_letters(letters)

    @property
    def raw(self) -> tuple[int, ...]:
        """Signed-integer letters of the reduced word."""
        return self._letters

    @property
    def letters(self) -> tuple[tuple[int, int], ...]:
        """Pairs ``(generator_index, sign)`` of the reduced word."""
        return tuple((abs(x) - 1, 1 if x > 0 else -1) for x in self._letters)

    def __mul__(self, other: "Word") -> "Word":
        return Word(self._letters + other._letters)

    def __invert__(self) -> "Word":
        return Word(tuple(-x for x in reversed(self._letters)))

    def __pow__(self, n: int) -> "Word":
        if n < 0:
            return (~self) ** (-n)
        return Word(self._letters * n)

    def __len__(self) -> int:
        return len(self._letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self._letters)

    def __bool__(self) -> bool:
        return bool(self._letters)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Word) and self._letters == other._letters

    def __hash__(self) -> int:
        return hash(self._letters)

    def __repr__(self) -> str:
        return f"Word({format_word(self)!r})"

    def exponent_sum(self, gen: int) -> int:
        """Total signed exponent of generator ``gen`` in this word."""
        target = gen + 1
        return sum(1 if x == target else -1 for x in self._letters if abs(x) == target)

    def max_generator(self) -> int:
        """Largest generator index used, or -1 for the empty word."""
        return max((abs(x) - 1 for x in self._letters), default=-1)


IDENTITY = Word()


def generator(i: int) -> Word:
    if i < 0:
        raise ValueError("generator index must be nonnegative")
    return Word((i + 1,))


def free_reduce(w: "Word | Iterable[int]") -> Word:
    """Freely reduce a word or a raw letter sequence; idempotent."""
    if isinstance(w, Word):
        return w
    return Word(w)


_DEFAULT_NAMES = tuple("abcdefghijklmnopqrstuvwxyz")


def parse_word(text: str, names: Sequence[str]) -> Word:
    """Parse whitespace-separated ``name^exp`` syllables into a word.

    Rejects unknown generator names and zero exponents.
    """
    index = {name: i for i, name in enumerate(names)}
    letters: list[int] = []
    for token in text.split():
        name, _, exp_text = token.partition("^")
        if name not in index:
            raise ValueError(f"unknown generator {name!r} in word {text!r}")
        if exp_text:
            try:
                exp = int(exp_text)
            except ValueError:
                raise ValueError(f"bad exponent {exp_text!r} in word {text!r}") from None
        else:
            exp = 1
        if exp == 0:
            raise ValueError(f"zero exponent in word {text!r}")
        letter = index[name] + 1
        letters.extend([letter if exp > 0 else -letter] * abs(exp))
    return Word(letters)


def format_word(w: Word, names: Sequence[str] | None = None) -> str:
    """Render a word in the ``name^exp`` syllable syntax ('' for identity)."""
    if names is None:
        names = _DEFAULT_NAMES
    parts = []
    run_letter = 0
    run = 0
    for x in list(w.raw) + [0]:
        if x == run_letter:
            run += 1
            continue
        if run_letter != 0:
            name = names[abs(run_letter) - 1]
            exp = run if run_letter > 0 else -run
            parts.append(name if exp == 1 else f"{name}^{exp}")
        run_letter, run = x, 1
    return " ".join(parts)
