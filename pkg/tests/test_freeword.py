from hypothesis import given
from hypothesis import strategies as st

from braidld import FreeWord, Syllable, in_F2, in_G_minus, in_W, in_Z, inv, mul, reduce, strip_x1_conjugate
from braidld.freeword import IDENTITY, X1, X1_INV, _reduce
from braidld.harness import w_shape

from conftest import free_words, fw, raw_syllables


def test_reduce_examples():
    assert reduce([(1, 1), (2, 1), (2, -1), (1, 1)]) == fw((1, 2))
    assert reduce([]) == IDENTITY
    assert reduce([(2, 3), (2, -1), (1, 1)]).syllables == ((2, 2), (1, 1))


def test_reduce_cascades_through_several_levels():
    raw = [(1, 2), (2, 1), (3, 1), (3, -1), (2, -1), (1, -2), (4, 1)]
    assert reduce(raw) == fw((4, 1))


def test_zero_exponents_dropped():
    assert reduce([(3, 0), (1, 2), (2, 0), (1, -1)]) == fw((1, 1))


def test_bad_index_rejected():
    import pytest

    with pytest.raises(ValueError):
        reduce([(0, 1)])


def test_mul_examples():
    assert mul(fw((1, 1), (2, 1)), fw((2, -1), (1, 1))) == fw((1, 2))
    w = fw((3, 2), (1, -1))
    assert mul(w, IDENTITY) == w
    assert mul(X1, X1_INV) == IDENTITY
    assert X1 * X1_INV == IDENTITY


def test_inv_examples():
    assert inv(fw((1, 1), (2, 3))).syllables == ((2, -3), (1, -1))
    assert inv(IDENTITY) == IDENTITY
    assert inv(fw((2, -1))) == fw((2, 1))


def test_syllable_views():
    w = fw((1, 1), (2, 3))
    assert [s.index for s in w] == [1, 2]
    assert list(w) == [Syllable(1, 1), Syllable(2, 3)]
    assert w.letter_length == 4


def test_in_W_examples():
    assert in_W(fw((2, 1), (1, 3), (3, 1)))
    assert not in_W(fw((1, 1), (2, 1)))
    assert not in_W(IDENTITY)


def test_in_G_minus_examples():
    assert in_G_minus(fw((2, 1), (3, -1)))
    assert not in_G_minus(IDENTITY)
    assert not in_G_minus(fw((2, 1), (1, 1), (2, 1)))


def test_in_F2_examples():
    assert in_F2(fw((2, 1), (1, -2), (2, 1)))
    assert not in_F2(fw((3, 1)))
    assert in_F2(IDENTITY)


def test_in_Z_examples():
    # endpoints x3 and x4 both have index >= 3
    assert in_Z(fw((3, 1), (1, 1), (4, 1)))
    assert not in_Z(fw((2, 1), (3, 1)))
    assert in_Z(fw((3, 1)))
    assert not in_Z(IDENTITY)


def test_strip_x1_conjugate_examples():
    assert strip_x1_conjugate(fw((1, 1), (2, 1), (1, -1))) == fw((2, 1))
    assert strip_x1_conjugate(X1) is None
    # x1^2 x2 x1^-1: removing one x1 from each end leaves x1 x2, not in W
    assert strip_x1_conjugate(fw((1, 2), (2, 1), (1, -1))) is None
    assert strip_x1_conjugate(fw((1, 1), (1, -1))) is None


@given(raw_syllables)
def test_reduce_is_reduced_and_idempotent(raw):
    w = reduce(raw)
    s = w.syllables
    assert all(k != 0 for _, k in s)
    assert all(a[0] != b[0] for a, b in zip(s, s[1:]))
    assert reduce(s) == w
    assert FreeWord(raw) == w


@given(free_words, free_words, free_words)
def test_group_laws(a, b, c):
    assert mul(mul(a, b), c) == mul(a, mul(b, c))
    assert mul(a, inv(a)) == IDENTITY
    assert mul(inv(a), a) == IDENTITY
    assert inv(inv(a)) == a


@given(raw_syllables, raw_syllables)
def test_mul_agrees_with_reducing_the_concatenation(r1, r2):
    assert mul(reduce(r1), reduce(r2)).syllables == _reduce(list(r1) + list(r2))


@given(free_words)
def test_W_words_split_into_one_of_three_shapes(w):
    shape = w_shape(w)
    if not in_W(w):
        assert shape is None
        return
    kind = shape[0]
    if kind == "G-":
        assert in_G_minus(w)
        return
    if kind == "u x1^m v":
        _, u, m, v = shape
        rebuilt = u * FreeWord.gen(1, m) * v
    else:
        _, u, m, z, n, v = shape
        assert n != 0
        rebuilt = u * FreeWord.gen(1, m) * z * FreeWord.gen(1, n) * v
    assert m != 0
    assert in_G_minus(u) and in_G_minus(v)
    assert rebuilt == w


@given(free_words)
def test_strip_recovers_conjugated_word(w):
    conj = X1 * w * X1_INV
    if in_W(w):
        assert strip_x1_conjugate(conj) == w
        # no cancellation happens for W members
        assert len(conj) == len(w) + 2
    else:
        got = strip_x1_conjugate(conj)
        assert got is None or in_W(got)


@given(st.integers(1, 9), st.integers(-50, 50).filter(bool))
def test_gen_is_a_single_syllable(i, k):
    assert FreeWord.gen(i, k).syllables == ((i, k),)


def test_hash_and_equality_are_structural():
    assert hash(fw((1, 2), (2, -1))) == hash(reduce([(1, 1), (1, 1), (2, -1)]))
    assert {fw((1, 1)), reduce([(1, 2), (1, -1)])} == {X1}
