"""Braid words and the Artin action of the braid group on the free group.

The generator sigma_i acts on generators of F by::

    sigma_i:      x_i -> x_i x_{i+1} x_i^-1,   x_{i+1} -> x_i,   x_j -> x_j
    sigma_i^-1:   x_i -> x_{i+1},   x_{i+1} -> x_{i+1}^-1 x_i x_{i+1},   x_j -> x_j

for ``j`` outside ``{i, i+1}``.  A braid word is the composite of its
letters, so in ``apply(b, w)`` the last letter of ``b`` acts first and
``apply(b1 + b2, w) == apply(b1, apply(b2, w))``.  Two braid words are equal
in B exactly when they induce the same automorphism.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .freeword import FreeWord

DEFAULT_SYLLABLE_CAP = 10**6


class WordSizeError(RuntimeError):
    """A free word outgrew the syllable cap while a braid was acting on it."""

    def __init__(self, size: int, cap: int):
        super().__init__(f"free word reached {size} syllables (cap {cap})")
        self.size = size
        self.cap = cap


class BraidLetter(NamedTuple):
    index: int
    sign: int = 1

    def inverse(self) -> BraidLetter:
        return BraidLetter(self.index, -self.sign)


@dataclass(frozen=True)
class BraidWord:
    """A literal word in sigma_i^{+-1}.

    Nothing here ever cancels or reorders letters; ``s1 s1^-1`` stays two
    letters long.  Use :func:`free_reduce_word` to cancel explicitly.
    """

    letters: tuple[BraidLetter, ...] = ()

    def __post_init__(self):
        letters = tuple(BraidLetter(*lt) for lt in self.letters)
        for lt in letters:
            if lt.index < 1 or lt.sign not in (1, -1):
                raise ValueError(f"invalid braid letter {tuple(lt)}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def of(cls, *letters: int) -> BraidWord:
        """Build from signed indices: ``BraidWord.of(1, -2)`` is s1 s2^-1."""
        if any(i == 0 for i in letters):
            raise ValueError("letter index must be nonzero")
        return cls(tuple(BraidLetter(abs(i), 1 if i > 0 else -1) for i in letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __add__(self, other: BraidWord) -> BraidWord:
        if not isinstance(other, BraidWord):
            return NotImplemented
        return _word(self.letters + other.letters)

    def max_index(self) -> int:
        return max((lt.index for lt in self.letters), default=0)

    def __repr__(self) -> str:
        if not self.letters:
            return "BraidWord(1)"
        body = " ".join(f"s{i}" if e == 1 else f"s{i}^-1" for i, e in self.letters)
        return f"BraidWord({body})"


def _word(letters: tuple[BraidLetter, ...]) -> BraidWord:
    # letters are known valid; skip __post_init__ validation
    obj = object.__new__(BraidWord)
    object.__setattr__(obj, "letters", letters)
    return obj


def concat(*words: BraidWord) -> BraidWord:
    return _word(tuple(lt for w in words for lt in w.letters))


def _image_syllables(i: int, sign: int, j: int, k: int) -> tuple[tuple[int, int], ...]:
    """Image of the syllable x_j^k under sigma_i^sign, as raw syllables."""
    if j == i:
        if sign > 0:
            # (x_i x_{i+1} x_i^-1)^k telescopes
            return ((i, 1), (i + 1, k), (i, -1))
        return ((i + 1, k),)
    if j == i + 1:
        if sign > 0:
            return ((i, k),)
        return ((i + 1, -1), (i, k), (i + 1, 1))
    return ((j, k),)


def letter_action(letter: BraidLetter, w: FreeWord, cap: int = DEFAULT_SYLLABLE_CAP) -> FreeWord:
    """Image of ``w`` under the automorphism of a single letter."""
    i, sign = letter
    syl = w.syllables
    if not any(j == i or j == i + 1 for j, _ in syl):
        return w
    stack: list[tuple[int, int]] = []
    push = stack.append
    pop = stack.pop
    for j, k in syl:
        if j == i or j == i + 1:
            pieces = _image_syllables(i, sign, j, k)
        else:
            pieces = ((j, k),)
        for a, e in pieces:
            # same stack reduction as freeword._reduce, inlined for speed
            if stack and stack[-1][0] == a:
                m = stack[-1][1] + e
                if m:
                    stack[-1] = (a, m)
                else:
                    pop()
            else:
                push((a, e))
    if len(stack) > cap:
        raise WordSizeError(len(stack), cap)
    return FreeWord._trusted(tuple(stack))


def apply(b: BraidWord, w: FreeWord, cap: int = DEFAULT_SYLLABLE_CAP) -> FreeWord:
    """Image of ``w`` under the automorphism ``b``; the last letter acts first."""
    for letter in reversed(b.letters):
        w = letter_action(letter, w, cap)
    return w


def shift(b: BraidWord, k: int = 1) -> BraidWord:
    """Raise every letter index by ``k``."""
    if k < 0:
        raise ValueError("shift amount must be nonnegative")
    return _word(tuple(BraidLetter(i + k, e) for i, e in b.letters))


def inv_word(b: BraidWord) -> BraidWord:
    return _word(tuple(BraidLetter(i, -e) for i, e in reversed(b.letters)))


def braid_eq_direct(a: BraidWord, b: BraidWord, cap: int = DEFAULT_SYLLABLE_CAP) -> bool:
    """Compare images of x_1, ..., x_{M+1} under ``a`` and ``b`` directly.

    A letter sigma_i moves only x_i and x_{i+1}, so with ``M`` the largest
    letter index in either word, both words fix every x_j with j > M + 1.
    """
    m = max(a.max_index(), b.max_index())
    for j in range(1, m + 2):
        x = FreeWord.gen(j)
        if apply(a, x, cap) != apply(b, x, cap):
            return False
    return True


def _cyclic_reduce(letters: tuple[BraidLetter, ...]) -> tuple[BraidLetter, ...]:
    lo, hi = 0, len(letters)
    while hi - lo >= 2 and letters[lo] == letters[hi - 1].inverse():
        lo += 1
        hi -= 1
    return letters[lo:hi]


_BURAU_PRIME = (1 << 61) - 1
_BURAU_POINTS = (3, 1_000_003)


def burau_is_identity(b: BraidWord, t: int, p: int = _BURAU_PRIME) -> bool:
    """Is the unreduced Burau matrix of ``b``, evaluated at ``t`` mod ``p``, the identity?

    Burau is a homomorphism, so a non-identity matrix proves ``b`` nontrivial.
    The converse fails in general, which is why this is only a filter.
    """
    n = b.max_index() + 1
    t_inv = pow(t, -1, p)
    # columns of the running product, each a list of n entries
    cols = [[int(r == c) for r in range(n)] for c in range(n)]
    for i, e in b.letters:
        c0, c1 = cols[i - 1], cols[i]
        if e > 0:
            cols[i - 1] = [((1 - t) * u + v) % p for u, v in zip(c0, c1)]
            cols[i] = [t * u % p for u in c0]
        else:
            cols[i - 1] = [t_inv * v % p for v in c1]
            cols[i] = [(u + (1 - t_inv) * v) % p for u, v in zip(c0, c1)]
    return all(cols[c][r] == int(r == c) for c in range(n) for r in range(n))


def is_trivial(b: BraidWord, cap: int = DEFAULT_SYLLABLE_CAP) -> bool:
    """Does ``b`` act as the identity automorphism?

    A Burau matrix that is not the identity settles the question cheaply.
    Otherwise the free-group action decides: x_j is fixed by ``b`` iff it is
    fixed by ``b^-1``, and the two images can differ in size by orders of
    magnitude, so both are tried under a growing syllable budget.
    WordSizeError only if both exceed ``cap``.
    """
    b = _word(_cyclic_reduce(free_reduce_word(b).letters))
    if not all(burau_is_identity(b, t) for t in _BURAU_POINTS):
        return False
    candidates = (b, inv_word(b))
    for j in range(1, b.max_index() + 2):
        x = FreeWord.gen(j)
        budget = min(cap, 1024)
        while True:
            verdict = None
            for c in candidates:
                try:
                    verdict = apply(c, x, budget) == x
                    break
                except WordSizeError:
                    pass
            if verdict is not None:
                break
            if budget >= cap:
                raise WordSizeError(budget + 1, cap)
            budget = min(cap, budget * 16)
        if not verdict:
            return False
    return True


def braid_eq(a: BraidWord, b: BraidWord, cap: int = DEFAULT_SYLLABLE_CAP) -> bool:
    """Equality in B, i.e. equality of the induced automorphisms.

    ``a == b`` exactly when ``b^-1 a`` is trivial, and a braid is trivial
    exactly when any conjugate is, so common prefixes and suffixes cancel
    before any free word is built.  Agrees with :func:`braid_eq_direct`.
    """
    return is_trivial(concat(inv_word(b), a), cap)


def is_sigma1_positive(b: BraidWord) -> bool:
    """Syntactic test: some sigma_1 and no sigma_1^-1 in the literal word."""
    seen = False
    for i, e in b.letters:
        if i == 1:
            if e < 0:
                return False
            seen = True
    return seen


def decompose_sigma1(b: BraidWord) -> list[BraidWord]:
    """Split a sigma_1-positive word at its sigma_1 letters.

    Returns the blocks ``alpha_1, ..., alpha_n`` (possibly empty) with
    ``b = alpha_1 s1 alpha_2 s1 ... s1 alpha_n``.
    """
    if not is_sigma1_positive(b):
        raise ValueError(f"{b!r} is not sigma_1-positive")
    blocks: list[BraidWord] = []
    current: list[BraidLetter] = []
    for lt in b.letters:
        if lt.index == 1:
            blocks.append(_word(tuple(current)))
            current = []
        else:
            current.append(lt)
    blocks.append(_word(tuple(current)))
    return blocks


def free_reduce_word(b: BraidWord) -> BraidWord:
    """Cancel adjacent ``s_i s_i^-1`` pairs.  Never applied implicitly."""
    stack: list[BraidLetter] = []
    for lt in b.letters:
        if stack and stack[-1].index == lt.index and stack[-1].sign == -lt.sign:
            stack.pop()
        else:
            stack.append(lt)
    return _word(tuple(stack))
