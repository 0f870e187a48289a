from __future__ import annotations

from hypothesis import strategies as st

from braidld import BraidLetter, BraidWord, FreeWord, reduce

ACCEPTANCE_LINES: list[str] = []


raw_syllables = st.lists(st.tuples(st.integers(1, 5), st.integers(-4, 4)), max_size=20)
free_words = raw_syllables.map(reduce)
braid_letters = st.builds(BraidLetter, st.integers(1, 5), st.sampled_from((1, -1)))
braid_words = st.lists(braid_letters, max_size=12).map(lambda ls: BraidWord(tuple(ls)))


def fw(*syllables: tuple[int, int]) -> FreeWord:
    return FreeWord(syllables)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
