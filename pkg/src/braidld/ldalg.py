"""Left self-distributive structure on braid words.

``star(a, b) = a . s(b) . s1 . s(a^-1)`` where ``s`` shifts every index up by
one.  Iterating ``star`` from ``a`` leaves ``a`` as a literal prefix and adds
only sigma_1-positive material after it, which is what makes
``a != ((a * b1) * ...) * bk`` checkable: the added suffix moves ``x1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Optional, Sequence, Union

from .artin import (
    DEFAULT_SYLLABLE_CAP,
    BraidLetter,
    BraidWord,
    _word,
    apply,
    braid_eq,
    concat,
    inv_word,
    is_sigma1_positive,
    shift,
)
from .freeword import X1, FreeWord, in_W, strip_x1_conjugate

_SIGMA1 = (BraidLetter(1, 1),)


class Leaf:
    """The single generator of the LD algebra."""

    __slots__ = ()
    _instance: Optional[Leaf] = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    size = 1

    def __repr__(self) -> str:
        return "Leaf()"

    def __reduce__(self):
        return (Leaf, ())


@dataclass(frozen=True)
class Node:
    left: LDTerm
    right: LDTerm
    size: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "size", self.left.size + self.right.size)


LDTerm = Union[Leaf, Node]
LEAF = Leaf()


def star(a: BraidWord, b: BraidWord) -> BraidWord:
    return _word(a.letters + shift(b).letters + _SIGMA1 + shift(inv_word(a)).letters)


def fold_star(a: BraidWord, bs: Sequence[BraidWord]) -> tuple[BraidWord, BraidWord]:
    """Left fold of :func:`star` over ``bs`` starting at ``a``.

    Returns ``(result, suffix)`` with ``result == a + suffix`` letter for
    letter.
    """
    if not bs:
        raise ValueError("fold_star needs at least one right-hand argument")
    t = a
    for b in bs:
        t = star(t, b)
    # each star keeps its left argument as a literal prefix
    assert t.letters[: len(a)] == a.letters
    return t, _word(t.letters[len(a) :])


@dataclass(frozen=True)
class IrreflexivityCertificate:
    alpha: BraidWord
    betas: tuple[BraidWord, ...]
    result: BraidWord
    suffix: BraidWord
    sigma1_positive: bool
    image_of_x1: FreeWord
    stripped: Optional[FreeWord]
    distinct_from_alpha: bool

    @property
    def passed(self) -> bool:
        return self.sigma1_positive and self.stripped is not None and self.distinct_from_alpha

    def problems(self) -> list[str]:
        """Internal consistency failures; empty for a sound certificate."""
        out = []
        if concat(self.alpha, self.suffix) != self.result:
            out.append("alpha . suffix differs from result")
        if self.betas and not self.sigma1_positive:
            out.append("suffix is not sigma_1-positive")
        if self.stripped is not None:
            if not in_W(self.stripped):
                out.append("stripped word is not in W")
            if X1 * self.stripped * X1.inverse() != self.image_of_x1:
                out.append("image of x1 is not x1 . stripped . x1^-1")
        return out


def verify_irreflexivity(
    a: BraidWord, bs: Sequence[BraidWord], cap: int = DEFAULT_SYLLABLE_CAP
) -> IrreflexivityCertificate:
    """Check ``a != ((a * b1) * ...) * bk`` and record why it holds.

    Raises :class:`~braidld.artin.WordSizeError` if a free word outgrows ``cap``.
    """
    result, suffix = fold_star(a, bs)
    image = apply(suffix, X1, cap)
    return IrreflexivityCertificate(
        alpha=a,
        betas=tuple(bs),
        result=result,
        suffix=suffix,
        sigma1_positive=is_sigma1_positive(suffix),
        image_of_x1=image,
        stripped=strip_x1_conjugate(image),
        distinct_from_alpha=not braid_eq(a, result, cap),
    )


def eval_term(t: LDTerm, base: BraidWord = BraidWord()) -> BraidWord:
    """Interpret the generator as ``base`` and ``*`` as :func:`star`."""
    if isinstance(t, Leaf):
        return base
    return star(eval_term(t.left, base), eval_term(t.right, base))


def check_distributivity(
    a: BraidWord, b: BraidWord, c: BraidWord, cap: int = DEFAULT_SYLLABLE_CAP
) -> bool:
    return braid_eq(star(a, star(b, c)), star(star(a, b), star(a, c)), cap)


def check_laver_witness(
    a: BraidWord, b: BraidWord, bs: Sequence[BraidWord], cap: int = DEFAULT_SYLLABLE_CAP
) -> bool:
    """Does ``bs`` witness ``b == ((a * b1) * ...) * bk``?  No search."""
    return braid_eq(b, fold_star(a, bs)[0], cap)


# -- LD equivalence by rewriting ------------------------------------------------


class _Unknown:
    __slots__ = ()

    def __repr__(self) -> str:
        return "UNKNOWN"

    def __bool__(self):
        raise TypeError("UNKNOWN has no truth value; compare with `is UNKNOWN`")


UNKNOWN = _Unknown()

# Internally a term is () for the generator and (left, right) for a product,
# which hashes fast.  Sizes are memoized per term.
_Tup = tuple


def _to_tup(t: LDTerm) -> _Tup:
    if isinstance(t, Leaf):
        return ()
    return (_to_tup(t.left), _to_tup(t.right))


@lru_cache(maxsize=1 << 16)
def _tsize(t: _Tup) -> int:
    return 1 if not t else _tsize(t[0]) + _tsize(t[1])


def _ld_neighbours(t: _Tup) -> Iterator[_Tup]:
    """Terms one LD rewrite away, in either direction, at any position."""
    if not t:
        return
    left, right = t
    if right:
        # a*(b*c) -> (a*b)*(a*c)
        yield ((left, right[0]), (left, right[1]))
    if left and right and left[0] == right[0]:
        # (a*b)*(a*c) -> a*(b*c)
        yield (left[0], (left[1], right[1]))
    for n in _ld_neighbours(left):
        yield (n, right)
    for n in _ld_neighbours(right):
        yield (left, n)


class _Side:
    def __init__(self, start: _Tup):
        self.seen = {start}
        self.frontier = [start]
        self.truncated = False

    def expand(self, max_size: int) -> None:
        nxt = []
        for u in self.frontier:
            for v in _ld_neighbours(u):
                if v in self.seen:
                    continue
                if _tsize(v) > max_size:
                    self.truncated = True
                    continue
                self.seen.add(v)
                nxt.append(v)
        self.frontier = nxt

    @property
    def exhausted(self) -> bool:
        return not self.frontier and not self.truncated


def _ld_tables(n: int) -> Iterator[tuple[int, ...]]:
    """All LD operations on {0..n-1}, as row-major tables, by backtracking."""
    size = n * n
    tab = [-1] * size
    triples = [(a, b, c) for a in range(n) for b in range(n) for c in range(n)]

    def consistent() -> bool:
        for a, b, c in triples:
            bc, ab, ac = tab[b * n + c], tab[a * n + b], tab[a * n + c]
            if bc < 0 or ab < 0 or ac < 0:
                continue
            lhs, rhs = tab[a * n + bc], tab[ab * n + ac]
            if lhs >= 0 and rhs >= 0 and lhs != rhs:
                return False
        return True

    def rec(k: int) -> Iterator[tuple[int, ...]]:
        if k == size:
            yield tuple(tab)
            return
        for v in range(n):
            tab[k] = v
            if consistent():
                yield from rec(k + 1)
        tab[k] = -1

    return rec(0)


class _ModelStream:
    """Memoized lazy stream of finite LD systems, smallest first."""

    def __init__(self):
        self._cache: list[tuple[int, tuple[int, ...]]] = []
        self._done_sizes = 0
        self._gen: Optional[Iterator[tuple[int, ...]]] = None

    def upto(self, max_n: int) -> Iterator[tuple[int, tuple[int, ...]]]:
        i = 0
        while True:
            while i < len(self._cache):
                n, tab = self._cache[i]
                if n > max_n:
                    return
                yield n, tab
                i += 1
            if self._done_sizes >= max_n:
                return
            if self._gen is None:
                self._gen = _ld_tables(self._done_sizes + 1)
            tab = next(self._gen, None)
            if tab is None:
                self._done_sizes += 1
                self._gen = None
            else:
                self._cache.append((self._done_sizes + 1, tab))


_MODELS = _ModelStream()


def _model_value(t: _Tup, tab: tuple[int, ...], n: int, g: int) -> int:
    if not t:
        return g
    return tab[_model_value(t[0], tab, n, g) * n + _model_value(t[1], tab, n, g)]


def _countermodel(s: _Tup, t: _Tup, max_n: int) -> Optional[tuple[int, tuple[int, ...], int]]:
    for n, tab in _MODELS.upto(max_n):
        for g in range(n):
            if _model_value(s, tab, n, g) != _model_value(t, tab, n, g):
                return n, tab, g
    return None


@dataclass(frozen=True)
class OracleOutcome:
    verdict: object  # True, False or UNKNOWN
    reason: str
    steps: Optional[int] = None
    countermodel: Optional[tuple[int, tuple[int, ...], int]] = None


def ld_equiv_search(
    s: LDTerm,
    t: LDTerm,
    depth_bound: int = 8,
    size_bound: int = 64,
    model_size: int = 4,
) -> OracleOutcome:
    """Decide LD equivalence of two terms by brute force, where it can.

    Equivalence is proved by a bidirectional breadth-first closure under the
    LD law (both directions, any position), at most ``depth_bound`` rewrites
    in total and no intermediate term larger than ``size_bound`` leaves.
    Inequivalence is proved either by exhausting a closure or by a finite LD
    system on at most ``model_size`` elements in which the two terms take
    different values for some choice of generator.  Otherwise UNKNOWN.
    """
    if depth_bound < 1:
        raise ValueError("depth_bound must be positive")
    su, tu = _to_tup(s), _to_tup(t)
    if su == tu:
        return OracleOutcome(True, "identical", steps=0)

    # cheap small models settle most inequivalent pairs outright
    cm = _countermodel(su, tu, min(model_size, 3))
    if cm is not None:
        return OracleOutcome(False, "countermodel", countermodel=cm)

    a, b = _Side(su), _Side(tu)
    steps = 0
    while steps < depth_bound:
        side = a if len(a.frontier) <= len(b.frontier) else b
        if not side.frontier:
            side = b if side is a else a
        if not side.frontier:
            break
        side.expand(size_bound)
        steps += 1
        if not a.seen.isdisjoint(b.seen):
            return OracleOutcome(True, "closure", steps=steps)
        if a.exhausted or b.exhausted:
            return OracleOutcome(False, "closure exhausted", steps=steps)
    if a.exhausted or b.exhausted:
        return OracleOutcome(False, "closure exhausted", steps=steps)

    if model_size > 3:
        cm = _countermodel(su, tu, model_size)
        if cm is not None:
            return OracleOutcome(False, "countermodel", countermodel=cm)
    return OracleOutcome(UNKNOWN, "bounds reached", steps=steps)


def ld_equiv_oracle(
    s: LDTerm,
    t: LDTerm,
    depth_bound: int = 8,
    size_bound: int = 64,
    model_size: int = 4,
):
    """True, False, or :data:`UNKNOWN`; see :func:`ld_equiv_search`."""
    return ld_equiv_search(s, t, depth_bound, size_bound, model_size).verdict

