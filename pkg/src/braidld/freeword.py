"""Reduced words in the free group on x1, x2, x3, ...

A word is stored run-length encoded as a tuple of ``(index, exponent)`` pairs
with adjacent indices distinct, so ``x1 x2^3 x1^-1`` is
``((1, 1), (2, 3), (1, -1))``.  Iterating a word yields :class:`Syllable`
views of the same pairs.  The empty tuple is the identity.  Python
integers do not overflow, so exponents are unbounded.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple, Optional


class Syllable(NamedTuple):
    """A power ``x_index ** exponent`` of a single generator."""

    index: int
    exponent: int


class FreeWord:
    """An immutable reduced word.

    Constructing from an arbitrary syllable sequence reduces it, so two
    ``FreeWord`` values are equal exactly when they are the same group element.
    """

    __slots__ = ("syllables", "_hash")

    def __init__(self, syllables: Iterable[tuple[int, int]] = ()):
        self.syllables: tuple[tuple[int, int], ...] = _reduce(syllables)
        self._hash: Optional[int] = None

    @classmethod
    def _trusted(cls, syllables: tuple[tuple[int, int], ...]) -> FreeWord:
        # caller guarantees `syllables` is already reduced
        obj = cls.__new__(cls)
        obj.syllables = syllables
        obj._hash = None
        return obj

    @classmethod
    def gen(cls, index: int, exponent: int = 1) -> FreeWord:
        """Return ``x_index ** exponent``."""
        return cls(((index, exponent),))

    @property
    def letter_length(self) -> int:
        return sum(abs(k) for _, k in self.syllables)

    def max_index(self) -> int:
        return max((i for i, _ in self.syllables), default=0)

    def __len__(self) -> int:
        return len(self.syllables)

    def __iter__(self):
        return map(Syllable._make, self.syllables)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FreeWord):
            return NotImplemented
        return self.syllables == other.syllables

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.syllables)
        return self._hash

    def __mul__(self, other: FreeWord) -> FreeWord:
        if not isinstance(other, FreeWord):
            return NotImplemented
        return mul(self, other)

    def inverse(self) -> FreeWord:
        return inv(self)

    def __repr__(self) -> str:
        if not self.syllables:
            return "FreeWord(1)"
        body = " ".join(f"x{i}" if k == 1 else f"x{i}^{k}" for i, k in self.syllables)
        return f"FreeWord({body})"


IDENTITY = FreeWord._trusted(())
X1 = FreeWord._trusted(((1, 1),))
X1_INV = FreeWord._trusted(((1, -1),))


def _reduce(raw: Iterable[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    stack: list[tuple[int, int]] = []
    for index, exponent in raw:
        if index < 1:
            raise ValueError(f"generator index must be >= 1, got {index}")
        if exponent == 0:
            continue
        if stack and stack[-1][0] == index:
            merged = stack[-1][1] + exponent
            if merged:
                stack[-1] = (index, merged)
            else:
                # deletion may expose another equal-index pair; the stack
                # top and the next incoming syllable handle the cascade
                stack.pop()
        else:
            stack.append((index, exponent))
    return tuple(stack)


def reduce(raw: Iterable[tuple[int, int]]) -> FreeWord:
    """Freely reduce a syllable sequence.

    Zero exponents are dropped and adjacent equal-index syllables merged,
    cascading as cancellations expose new neighbours.

    >>> reduce([(1, 1), (2, 1), (2, -1), (1, 1)])
    FreeWord(x1^2)
    """
    return FreeWord._trusted(_reduce(raw))


def mul(a: FreeWord, b: FreeWord) -> FreeWord:
    sa, sb = a.syllables, b.syllables
    if not sa:
        return b
    if not sb:
        return a
    # only the junction can cancel; walk inward while syllables annihilate
    i, j = len(sa), 0
    while i > 0 and j < len(sb) and sa[i - 1][0] == sb[j][0]:
        merged = sa[i - 1][1] + sb[j][1]
        if merged:
            return FreeWord._trusted(sa[: i - 1] + ((sb[j][0], merged),) + sb[j + 1 :])
        i -= 1
        j += 1
    return FreeWord._trusted(sa[:i] + sb[j:])


def inv(a: FreeWord) -> FreeWord:
    return FreeWord._trusted(tuple((i, -k) for i, k in reversed(a.syllables)))


def in_W(w: FreeWord) -> bool:
    """Nontrivial and neither begins nor ends with a power of x1."""
    s = w.syllables
    return bool(s) and s[0][0] != 1 and s[-1][0] != 1


def in_G_minus(w: FreeWord) -> bool:
    """Nontrivial element of the subgroup generated by x2, x3, ..."""
    s = w.syllables
    return bool(s) and all(i >= 2 for i, _ in s)


def in_F2(w: FreeWord) -> bool:
    """Element of the subgroup generated by x1 and x2 (identity included)."""
    return all(i <= 2 for i, _ in w.syllables)


def in_Z(w: FreeWord) -> bool:
    """Nontrivial, and both the first and last syllables have index >= 3.

    A one-syllable word is judged by its only syllable.
    """
    s = w.syllables
    return bool(s) and s[0][0] >= 3 and s[-1][0] >= 3


def strip_x1_conjugate(v: FreeWord) -> Optional[FreeWord]:
    """Return ``w`` if ``v == x1 w x1^-1`` with ``w`` in W, else None.

    For such ``w`` the product is already reduced, so the test only looks at
    the two end syllables of ``v``.
    """
    s = v.syllables
    if len(s) < 3 or s[0] != (1, 1) or s[-1] != (1, -1):
        return None
    # s[1] and s[-2] cannot have index 1 (adjacent syllables differ), and
    # len >= 3 guarantees the middle is nonempty, so the middle is in W
    return FreeWord._trusted(s[1:-1])
