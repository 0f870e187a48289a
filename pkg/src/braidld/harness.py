"""Seeded samplers, brute-force oracles and the randomized property suites.

Every trial draws from its own ``random.Random`` seeded with the string
``"<seed>:<suite>:<trial>"``, so a report depends only on the seed and the
trial count, never on scheduling.
"""

from __future__ import annotations

import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Callable, Optional

from .artin import (
    DEFAULT_SYLLABLE_CAP,
    BraidLetter,
    BraidWord,
    WordSizeError,
    _word,
    apply,
    braid_eq,
    concat,
    decompose_sigma1,
    inv_word,
    letter_action,
)
from .freeword import X1, X1_INV, FreeWord, in_G_minus, in_W, reduce, strip_x1_conjugate
from .ldalg import LEAF, LDTerm, Node, check_distributivity, verify_irreflexivity
from .textio import print_braid_word, print_free_word

PRNG_NAME = "MT19937 (Python random.Random), per-trial string seeds"


@dataclass(frozen=True)
class SampleConfig:
    seed: int = 0
    max_index: int = 6
    max_len: int = 16
    max_exp: int = 5
    max_term_size: int = 8

    def __post_init__(self):
        for name in ("max_index", "max_len", "max_exp", "max_term_size"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be >= 1")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")


class Sampler:
    """A stream of random words and terms shaped by a :class:`SampleConfig`.

    Samplers are not thread-safe; give each worker its own via :meth:`fork`.
    """

    def __init__(self, cfg: SampleConfig, rng: Optional[random.Random] = None):
        self.cfg = cfg
        self.rng = rng if rng is not None else random.Random(cfg.seed)

    def fork(self, key: object) -> Sampler:
        return Sampler(self.cfg, random.Random(f"{self.cfg.seed}:{key}"))

    def _exponent(self) -> int:
        r = self.rng
        k = 1 if r.random() < 0.4 else r.randint(1, self.cfg.max_exp)
        return k if r.random() < 0.5 else -k

    def _length(self, lo: int, hi: int) -> int:
        # boundary lengths are over-represented on purpose
        r = self.rng.random()
        if r < 0.15:
            return lo
        if r < 0.25:
            return hi
        return self.rng.randint(lo, hi)

    def gen_free_word(self) -> FreeWord:
        n = self._length(0, self.cfg.max_len)
        m = self.cfg.max_index
        syl = []
        prev = 0
        for _ in range(n):
            choices = [i for i in range(1, m + 1) if i != prev]
            if not choices:
                break
            prev = self.rng.choice(choices)
            syl.append((prev, self._exponent()))
        return reduce(syl)

    def gen_W_word(self) -> FreeWord:
        """Construct a member of W; x1 syllables appear in the interior."""
        m = max(self.cfg.max_index, 2)
        n = self._length(1, self.cfg.max_len)
        syl = []
        prev = 0
        for pos in range(n):
            if pos == 0 or pos == n - 1:
                choices = [i for i in range(2, m + 1) if i != prev]
            elif prev != 1 and self.rng.random() < 0.4:
                choices = [1]
            else:
                choices = [i for i in range(1, m + 1) if i != prev]
            if not choices:
                # only x2 is available and it was just used; x2^k already ends the word
                break
            prev = self.rng.choice(choices)
            syl.append((prev, self._exponent()))
        w = FreeWord(syl)
        assert in_W(w), w
        return w

    def gen_W_word_rejection(self, max_tries: int = 10_000) -> FreeWord:
        """Second-opinion W sampler: draw free words until one lands in W."""
        for _ in range(max_tries):
            w = self.gen_free_word()
            if in_W(w):
                return w
        raise RuntimeError("rejection sampler found no word in W")

    def gen_letter(self, lo: int = 1) -> BraidLetter:
        hi = max(self.cfg.max_index, lo)
        return BraidLetter(self.rng.randint(lo, hi), self.rng.choice((1, -1)))

    def gen_braid_word(self, max_len: Optional[int] = None) -> BraidWord:
        n = self._length(0, self.cfg.max_len if max_len is None else max_len)
        return _word(tuple(self.gen_letter() for _ in range(n)))

    def gen_sigma1_positive(self, max_len: Optional[int] = None) -> BraidWord:
        """Some s1 letters, no s1^-1, other letters of index >= 2."""
        n = self._length(1, self.cfg.max_len if max_len is None else max_len)
        if self.cfg.max_index < 2:
            return _word((BraidLetter(1, 1),) * n)
        k = self.rng.randint(1, n)
        where = set(self.rng.sample(range(n), k))
        letters = tuple(BraidLetter(1, 1) if p in where else self.gen_letter(2) for p in range(n))
        return _word(letters)

    def gen_ld_term(self, size: Optional[int] = None) -> LDTerm:
        if size is None:
            size = self.rng.randint(1, self.cfg.max_term_size)
        if size == 1:
            return LEAF
        k = self.rng.randint(1, size - 1)
        return Node(self.gen_ld_term(k), self.gen_ld_term(size - k))


# -- independent oracles ---------------------------------------------------------


def to_letters(w: FreeWord) -> list[int]:
    """Expand syllables into signed letters: x2^-2 -> [-2, -2]."""
    out = []
    for i, k in w.syllables:
        out.extend([i if k > 0 else -i] * abs(k))
    return out


def from_letters(letters: list[int]) -> FreeWord:
    return FreeWord((abs(a), 1 if a > 0 else -1) for a in letters)


def naive_reduce(letters: list[int]) -> list[int]:
    """Delete adjacent ``a, -a`` pairs by rescanning until none remain."""
    word = list(letters)
    changed = True
    while changed:
        changed = False
        for p in range(len(word) - 1):
            if word[p] == -word[p + 1]:
                del word[p : p + 2]
                changed = True
                break
    return word


def naive_letter_action(letter: BraidLetter, word: list[int]) -> list[int]:
    """Letter-by-letter image of a signed-letter word, written from the
    generator table alone."""
    i, sign = letter
    if sign > 0:
        table = {i: [i, i + 1, -i], i + 1: [i]}
    else:
        table = {i: [i + 1], i + 1: [-(i + 1), i, i + 1]}
    out: list[int] = []
    for a in word:
        img = table.get(abs(a), [abs(a)])
        out.extend(img if a > 0 else [-b for b in reversed(img)])
    return naive_reduce(out)


def enumerate_ld_terms(size: int) -> list[LDTerm]:
    """Every term with exactly ``size`` leaves."""
    if size < 1:
        raise ValueError("size must be >= 1")
    if size == 1:
        return [LEAF]
    return [
        Node(left, right)
        for k in range(1, size)
        for left in enumerate_ld_terms(k)
        for right in enumerate_ld_terms(size - k)
    ]


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


def w_shape(w: FreeWord) -> Optional[tuple]:
    """Split ``w`` in W into one of three shapes, by how many x1 syllables it has.

    ``("G-", w)`` when ``w`` avoids x1; ``("u x1^m v", u, m, v)`` with one x1
    syllable; ``("u x1^m z x1^n v", u, m, z, n, v)`` otherwise.  None if
    ``w`` is not in W.
    """
    if not in_W(w):
        return None
    s = w.syllables
    ones = [p for p, (i, _) in enumerate(s) if i == 1]
    if not ones:
        return ("G-", w)
    first, last = ones[0], ones[-1]
    u = FreeWord._trusted(s[:first])
    v = FreeWord._trusted(s[last + 1 :])
    if first == last:
        return ("u x1^m v", u, s[first][1], v)
    z = FreeWord._trusted(s[first + 1 : last])
    return ("u x1^m z x1^n v", u, s[first][1], z, s[last][1], v)


# -- property suites -----------------------------------------------------------


def _b(w: BraidWord) -> str:
    return f'"{print_braid_word(w)}"'


def _f(w: FreeWord) -> str:
    return f'"{print_free_word(w)}"'


def _trial_preserves_W(s: Sampler, cap: int) -> Optional[str]:
    i = s.rng.randint(2, max(2, s.cfg.max_index))
    w = s.gen_W_word()
    for sign in (1, -1):
        lt = BraidLetter(i, sign)
        img = letter_action(lt, w, cap)
        if not in_W(img):
            return f"letter=({i},{sign}) w={_f(w)}: image {_f(img)} not in W"
        if letter_action(lt, X1, cap) != X1:
            return f"letter=({i},{sign}) moves x1"
        if in_G_minus(w) and not in_G_minus(img):
            return f"letter=({i},{sign}) w={_f(w)}: image {_f(img)} left G-"
    return None


def _trial_x1_conjugate(s: Sampler, cap: int) -> Optional[str]:
    w = s.gen_W_word()
    img = letter_action(BraidLetter(1, 1), X1 * w * X1_INV, cap)
    bar = strip_x1_conjugate(img)
    if bar is None or not in_W(bar):
        return f"w={_f(w)}: s1(x1 w x1^-1) = {_f(img)} not in x1 W x1^-1"
    return None


def _trial_moves_x1(s: Sampler, cap: int) -> Optional[str]:
    b = s.gen_sigma1_positive()
    blocks = decompose_sigma1(b)
    sigma1 = _word((BraidLetter(1, 1),))
    # walk from the right: the last block fixes x1, and each
    # "block s1" factor keeps the image inside x1 W x1^-1
    img = apply(blocks[-1], X1, cap)
    if img != X1:
        return f"b={_b(b)}: last block moves x1 to {_f(img)}"
    for block in reversed(blocks[:-1]):
        img = apply(concat(block, sigma1), img, cap)
        if strip_x1_conjugate(img) is None:
            return f"b={_b(b)}: partial image {_f(img)} left x1 W x1^-1"
    if img == X1 or img != apply(b, X1, cap):
        return f"b={_b(b)}: image of x1 is {_f(img)}"
    return None


def _trial_distributive(s: Sampler, cap: int) -> Optional[str]:
    a, b, c = s.gen_braid_word(), s.gen_braid_word(), s.gen_braid_word()
    if not check_distributivity(a, b, c, cap):
        return f"a={_b(a)} b={_b(b)} c={_b(c)}: a*(b*c) != (a*b)*(a*c)"
    return None


def _trial_certificate(s: Sampler, cap: int) -> Optional[str]:
    alpha = s.gen_braid_word()
    k = s.rng.randint(1, 4)
    betas = [s.gen_braid_word(min(4, s.cfg.max_len)) for _ in range(k)]
    cert = verify_irreflexivity(alpha, betas, cap)
    bad = cert.problems()
    if not cert.passed or bad:
        why = "; ".join(bad) or "certificate did not pass"
        return f"alpha={_b(alpha)} betas=[{', '.join(_b(x) for x in betas)}]: {why}"
    return None


def _rewrite_once(s: Sampler, b: BraidWord) -> BraidWord:
    """Apply one braid relation somewhere in ``b`` (or insert a relator)."""
    letters = list(b.letters)
    r = s.rng
    spots = [
        p
        for p in range(len(letters) - 1)
        if abs(letters[p].index - letters[p + 1].index) > 1
    ]
    triples = [
        p
        for p in range(len(letters) - 2)
        if letters[p] == letters[p + 2]
        and letters[p].sign == letters[p + 1].sign
        and abs(letters[p].index - letters[p + 1].index) == 1
    ]
    if triples and r.random() < 0.5:
        p = r.choice(triples)
        x, y = letters[p], letters[p + 1]
        letters[p : p + 3] = [y, x, y]
    elif spots and r.random() < 0.7:
        p = r.choice(spots)
        letters[p], letters[p + 1] = letters[p + 1], letters[p]
    else:
        i = r.randint(1, max(1, s.cfg.max_index))
        lhs = [BraidLetter(i, 1), BraidLetter(i + 1, 1), BraidLetter(i, 1)]
        rhs = [BraidLetter(i + 1, 1), BraidLetter(i, 1), BraidLetter(i + 1, 1)]
        relator = lhs + [lt.inverse() for lt in reversed(rhs)]
        p = r.randint(0, len(letters))
        letters[p:p] = relator
    return _word(tuple(letters))


def _trial_relations(s: Sampler, cap: int) -> Optional[str]:
    b = s.gen_braid_word()
    w, u, v = s.gen_free_word(), s.gen_free_word(), s.gen_free_word()
    if apply(concat(b, inv_word(b)), w, cap) != w:
        return f"b={_b(b)} w={_f(w)}: b . b^-1 does not act trivially"
    if apply(b, u * v, cap) != apply(b, u, cap) * apply(b, v, cap):
        return f"b={_b(b)} u={_f(u)} v={_f(v)}: action is not multiplicative"
    lt = s.gen_letter()
    p = s.rng.randint(0, len(b))
    padded = _word(b.letters[:p] + (lt, lt.inverse()) + b.letters[p:])
    if not braid_eq(b, padded, cap):
        return f"b={_b(b)}: inserting a cancelling pair changed the braid ({_b(padded)})"
    c = b
    for _ in range(s.rng.randint(1, 3)):
        c = _rewrite_once(s, c)
    if not braid_eq(b, c, cap) or not braid_eq(c, b, cap):
        return f"b={_b(b)} rewritten={_b(c)}: braid relation not respected"
    return None


def _trial_oracle(s: Sampler, cap: int) -> Optional[str]:
    lt = s.gen_letter()
    w = s.gen_free_word()
    fast = letter_action(lt, w, cap)
    slow = from_letters(naive_letter_action(lt, to_letters(w)))
    if fast != slow:
        return f"letter=({lt.index},{lt.sign}) w={_f(w)}: {_f(fast)} vs naive {_f(slow)}"
    return None


@dataclass(frozen=True)
class Suite:
    trial: Callable[[Sampler, int], Optional[str]]
    defaults: dict = field(default_factory=dict)
    about: str = ""


SUITES: dict[str, Suite] = {
    "lemma3": Suite(_trial_preserves_W, {"max_index": 6, "max_len": 16}, "s_i, i >= 2, preserves W"),
    "lemma4": Suite(_trial_x1_conjugate, {"max_index": 6, "max_len": 16}, "s1(x1 w x1^-1) in x1 W x1^-1"),
    "lemma5": Suite(_trial_moves_x1, {"max_index": 6, "max_len": 24}, "s1-positive words move x1"),
    "lemma6": Suite(_trial_distributive, {"max_index": 4, "max_len": 6}, "left self-distributivity"),
    "theorem": Suite(_trial_certificate, {"max_index": 6, "max_len": 6}, "irreflexivity certificates"),
    "relations": Suite(_trial_relations, {"max_index": 6, "max_len": 16}, "braid relations and inverses"),
    "oracle": Suite(_trial_oracle, {"max_index": 6, "max_len": 16}, "syllable engine vs naive engine"),
}
SUITE_NAMES = tuple(SUITES)


@dataclass
class SuiteReport:
    name: str
    seed: int
    trials: int
    config: SampleConfig
    failures: list[tuple[int, str]] = field(default_factory=list)
    overflows: list[tuple[int, str]] = field(default_factory=list)

    @property
    def ok(self) -> int:
        return self.trials - len(self.failures) - len(self.overflows)

    def lines(self) -> list[str]:
        c = self.config
        out = [
            f"{self.name}: {self.ok}/{self.trials} ok"
            + (f", {len(self.failures)} failed" if self.failures else "")
            + (f", {len(self.overflows)} overflow" if self.overflows else "")
            + f"  [max_index={c.max_index} max_len={c.max_len}]"
        ]
        out += [f"  FAIL trial {t}: {msg}" for t, msg in self.failures]
        out += [f"  OVERFLOW trial {t}: {msg}" for t, msg in self.overflows]
        return out

    def as_dict(self) -> dict:
        return {
            "suite": self.name,
            "trials": self.trials,
            "ok": self.ok,
            "max_index": self.config.max_index,
            "max_len": self.config.max_len,
            "failures": [{"trial": t, "detail": m} for t, m in self.failures],
            "overflows": [{"trial": t, "detail": m} for t, m in self.overflows],
        }


def suite_config(name: str, seed: int, max_index: Optional[int] = None, max_len: Optional[int] = None) -> SampleConfig:
    cfg = replace(SampleConfig(seed=seed), **SUITES[name].defaults)
    if max_index is not None:
        cfg = replace(cfg, max_index=max_index)
    if max_len is not None:
        cfg = replace(cfg, max_len=max_len)
    return cfg


def run_trial(name: str, cfg: SampleConfig, index: int, cap: int = DEFAULT_SYLLABLE_CAP) -> tuple[str, Optional[str]]:
    """Run trial ``index`` of a suite.  Returns ``(status, detail)``."""
    sampler = Sampler(cfg, random.Random(f"{cfg.seed}:{name}:{index}"))
    try:
        detail = SUITES[name].trial(sampler, cap)
    except WordSizeError as exc:
        return "overflow", str(exc)
    return ("ok", None) if detail is None else ("fail", detail)


def _run_trial_args(args):
    return run_trial(*args)


def run_suite(
    name: str,
    seed: int = 0,
    trials: int = 500,
    max_index: Optional[int] = None,
    max_len: Optional[int] = None,
    cap: int = DEFAULT_SYLLABLE_CAP,
    jobs: int = 1,
) -> SuiteReport:
    if name not in SUITES:
        raise KeyError(name)
    if trials < 1:
        raise ValueError("trials must be >= 1")
    cfg = suite_config(name, seed, max_index, max_len)
    work = [(name, cfg, t, cap) for t in range(trials)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_trial_args, work, chunksize=max(1, trials // (4 * jobs))))
    else:
        results = [run_trial(*args) for args in work]
    report = SuiteReport(name, seed, trials, cfg)
    for t, (status, detail) in enumerate(results):
        if status == "fail":
            report.failures.append((t, detail))
        elif status == "overflow":
            report.overflows.append((t, detail))
    return report
