"""Words and biwords over the alphabet {1, 2, ..., r}.

A word is a tuple of positive integer letters.  A biword is a pair of
words of equal length, viewed as a two-row array whose columns are read
left to right; the top row is written over the bottom row.  Biwords
multiply by concatenation and the empty biword is the unit.

The alphabet bound r is configuration data held by whoever builds the
words (parser, generators, enumeration); letters themselves are plain
ints and are only checked against r where a bound is actually known.
"""

from collections.abc import Iterable, Sequence

Word = tuple[int, ...]


def inv(word: Sequence[int]) -> int:
    """Number of strict inversions: pairs i < j with word[i] > word[j].

    >>> inv((2, 3, 1))
    2
    >>> inv(())
    0
    """
    n = len(word)
    return sum(1 for i in range(n) for j in range(i + 1, n) if word[i] > word[j])


def imv(word: Sequence[int]) -> int:
    """Number of large inversions: pairs i < j with word[i] >= word[j].

    >>> imv((2, 2, 1))
    3
    >>> imv((1, 2, 3))
    0
    """
    n = len(word)
    return sum(1 for i in range(n) for j in range(i + 1, n) if word[i] >= word[j])


def cross_inversions(u: Sequence[int], v: Sequence[int]) -> int:
    """Number of pairs (x, y) with x a letter of u, y a letter of v and x > y.

    Counts letter occurrences, so repeated letters contribute repeatedly:

    >>> cross_inversions((2, 1), (1, 2))
    1
    >>> cross_inversions((2, 2), (1, 1))
    4
    """
    return sum(1 for x in u for y in v if x > y)


def sorted_rearrangement(word: Sequence[int]) -> Word:
    """The nondecreasing rearrangement of a word.

    >>> sorted_rearrangement((2, 1, 2))
    (1, 2, 2)
    """
    return tuple(sorted(word))


def validate_word(word: Iterable[int], r: int) -> None:
    """Raise ValueError unless every letter lies in 1..r."""
    for x in word:
        if not 1 <= x <= r:
            raise ValueError(f"letter {x} outside alphabet 1..{r}")


def format_word_pair(top: Word, bottom: Word) -> str:
    if not top and not bottom:
        return "e"
    if all(1 <= x <= 9 for x in top) and all(1 <= x <= 9 for x in bottom):
        return "%s/%s" % ("".join(map(str, top)), "".join(map(str, bottom)))
    return "(%s)/(%s)" % (",".join(map(str, top)), ",".join(map(str, bottom)))


class Biword:
    """An ordered pair of equal-length words, multiplied by concatenation.

    Immutable by convention; instances hash and sort by the canonical key
    (length, top word, bottom word), which is also the printing order for
    expressions.
    """

    __slots__ = ("top", "bottom", "_hash")

    def __init__(self, top: Iterable[int], bottom: Iterable[int]):
        top = tuple(top)
        bottom = tuple(bottom)
        if len(top) != len(bottom):
            raise ValueError(
                f"rows differ in length: {len(top)} vs {len(bottom)}"
            )
        for x in top:
            if x < 1:
                raise ValueError(f"letter {x} is not a positive integer")
        for x in bottom:
            if x < 1:
                raise ValueError(f"letter {x} is not a positive integer")
        self.top = top
        self.bottom = bottom
        self._hash = hash((top, bottom))

    @classmethod
    def _make(cls, top: Word, bottom: Word) -> "Biword":
        # Trusted constructor for internal call sites that already hold
        # validated tuples; skips the per-letter checks.
        self = object.__new__(cls)
        self.top = top
        self.bottom = bottom
        self._hash = hash((top, bottom))
        return self

    def __len__(self) -> int:
        return len(self.top)

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Biword):
            return NotImplemented
        return self.top == other.top and self.bottom == other.bottom

    def sort_key(self) -> tuple[int, Word, Word]:
        return (len(self.top), self.top, self.bottom)

    def __lt__(self, other: "Biword") -> bool:
        return self.sort_key() < other.sort_key()

    def __mul__(self, other: "Biword") -> "Biword":
        if not isinstance(other, Biword):
            return NotImplemented
        return Biword._make(self.top + other.top, self.bottom + other.bottom)

    def inv_minus(self) -> int:
        """inv(bottom) - inv(top), the exponent used by the q-weighting.

        >>> Biword((3, 2, 1), (2, 3, 1)).inv_minus()
        -1
        """
        return inv(self.bottom) - inv(self.top)

    def inv_plus(self) -> int:
        """imv(bottom) + inv(top), the termination measure of rewriting.

        >>> Biword((3, 2, 1), (3, 2, 1)).inv_plus()
        6
        """
        return imv(self.bottom) + inv(self.top)

    def double_descents(self) -> tuple[int, ...]:
        """1-based positions i with top[i] > top[i+1] and bottom[i] >= bottom[i+1].

        >>> Biword((3, 2, 1), (3, 2, 1)).double_descents()
        (1, 2)
        >>> Biword((1, 2, 3), (3, 2, 1)).double_descents()
        ()
        """
        top = self.top
        bottom = self.bottom
        return tuple(
            i + 1
            for i in range(len(top) - 1)
            if top[i] > top[i + 1] and bottom[i] >= bottom[i + 1]
        )

    def is_irreducible(self) -> bool:
        """True when the biword has no double descent."""
        top = self.top
        bottom = self.bottom
        for i in range(len(top) - 1):
            if top[i] > top[i + 1] and bottom[i] >= bottom[i + 1]:
                return False
        return True

    def is_circuit(self) -> bool:
        """True when the top word is a rearrangement of the bottom word.

        >>> Biword((2, 1), (1, 2)).is_circuit()
        True
        >>> Biword((1, 1), (1, 2)).is_circuit()
        False
        """
        return sorted(self.top) == sorted(self.bottom)

    def __str__(self) -> str:
        return format_word_pair(self.top, self.bottom)

    def __repr__(self) -> str:
        return f"Biword({self.top!r}, {self.bottom!r})"


EMPTY_BIWORD = Biword((), ())
