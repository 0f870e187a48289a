import pytest
from hypothesis import given
from hypothesis import strategies as st

from braidld import (
    LEAF,
    BraidWord,
    Node,
    ParseError,
    SourceSpan,
    parse_braid_word,
    parse_free_word,
    parse_ld_term,
    print_braid_word,
    print_free_word,
    print_ld_term,
)
from braidld.freeword import IDENTITY
from braidld.textio import read_fixture

from conftest import braid_words, free_words, fw

B = BraidWord.of


def ld_terms(max_leaves=8):
    return st.recursive(st.just(LEAF), lambda sub: st.builds(Node, sub, sub), max_leaves=max_leaves)


def test_parse_free_word_examples():
    assert parse_free_word("x2 x1^3 x3") == fw((2, 1), (1, 3), (3, 1))
    assert parse_free_word("1") == IDENTITY
    assert parse_free_word("") == IDENTITY
    assert parse_free_word("x1 x1^-1") == IDENTITY
    assert parse_free_word("  x4^+2\tx4 ") == fw((4, 3))


@pytest.mark.parametrize(
    "text,span",
    [("x0", (0, 2)), ("x1 x2^0", (3, 7)), ("x1 y2", (3, 5)), ("x1 1", (3, 4)), ("x1^", (0, 3))],
)
def test_free_word_errors(text, span):
    with pytest.raises(ParseError) as info:
        parse_free_word(text)
    assert info.value.span == SourceSpan(*span)


def test_parse_braid_word_examples():
    assert parse_braid_word("s1 s2^-1") == B(1, -2)
    assert parse_braid_word("1") == B()
    assert parse_braid_word("s1 s1^-1") == B(1, -1)
    assert len(parse_braid_word("s1 s1^-1")) == 2


@pytest.mark.parametrize("text,span", [("s0", (0, 2)), ("s1 s2^2", (3, 7)), ("s1 s2^1", (3, 7)), ("s1 t", (3, 4))])
def test_braid_word_errors(text, span):
    with pytest.raises(ParseError) as info:
        parse_braid_word(text)
    assert info.value.span == SourceSpan(*span)


def test_spans_are_byte_offsets():
    with pytest.raises(ParseError) as info:
        parse_braid_word("s1 σ1")
    assert info.value.span == SourceSpan(3, 6)
    assert info.value.caret().splitlines()[1] == "   ^^"


def test_parse_ld_term_examples():
    assert parse_ld_term("x*(x*x)") == Node(LEAF, Node(LEAF, LEAF))
    assert parse_ld_term("x*x*x") == Node(Node(LEAF, LEAF), LEAF)
    assert parse_ld_term("x") == LEAF
    assert parse_ld_term(" ( x ) * ( (x) ) ") == Node(LEAF, LEAF)


@pytest.mark.parametrize(
    "text,span",
    [("(x*x", (0, 1)), ("x*x)", (3, 4)), ("x*", (2, 2)), ("x y", (2, 3)), ("", (0, 0)), ("x*(x x)", (5, 6))],
)
def test_ld_term_errors(text, span):
    with pytest.raises(ParseError) as info:
        parse_ld_term(text)
    assert info.value.span == SourceSpan(*span)


def test_printer_examples():
    assert print_free_word(fw((1, 1), (2, 3))) == "x1 x2^3"
    assert print_free_word(IDENTITY) == "1"
    assert print_braid_word(B(2, -1)) == "s2 s1^-1"
    assert print_braid_word(B()) == "1"
    assert print_ld_term(Node(LEAF, Node(LEAF, LEAF))) == "x*(x*x)"
    assert print_ld_term(Node(Node(LEAF, LEAF), LEAF)) == "x*x*x"


@given(free_words)
def test_free_word_round_trip(w):
    assert parse_free_word(print_free_word(w)) == w


@given(braid_words)
def test_braid_word_round_trip(b):
    assert parse_braid_word(print_braid_word(b)) == b


@given(ld_terms())
def test_ld_term_round_trip(t):
    assert parse_ld_term(print_ld_term(t)) == t


@given(ld_terms())
def test_printed_terms_use_minimal_parentheses(t):
    text = print_ld_term(t)
    # every parenthesis wraps a right operand that is itself a product
    assert "((" not in text and not text.startswith("(")


@given(st.lists(st.sampled_from(["x1", "x2^-3", "x3^2", "x1^-1", "x2"]), max_size=8).map(" ".join))
def test_print_parse_idempotent_on_strings(text):
    once = print_free_word(parse_free_word(text))
    assert print_free_word(parse_free_word(once)) == once


@given(st.lists(st.sampled_from(["x", "(", ")", "*"]), max_size=12).map("".join))
def test_term_parser_never_crashes(text):
    try:
        t = parse_ld_term(text)
    except ParseError as exc:
        assert 0 <= exc.span.start <= exc.span.end <= len(text.encode())
    else:
        once = print_ld_term(t)
        assert print_ld_term(parse_ld_term(once)) == once


def test_read_fixture(tmp_path):
    path = tmp_path / "betas.txt"
    path.write_text("# betas for a run\ns1 s2^-1\n\n1   # identity\ns3\n", encoding="utf-8")
    assert read_fixture(path, "braid") == [B(1, -2), B(), B(3)]
    assert read_fixture(["x*x", "x # leaf"], "term") == [Node(LEAF, LEAF), LEAF]
    assert read_fixture(["x1 x1"], "free") == [fw((1, 2))]
