import random
from dataclasses import replace

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braidld import LEAF, BraidLetter, Node, in_W, is_sigma1_positive
from braidld.harness import (
    SUITE_NAMES,
    SampleConfig,
    Sampler,
    catalan,
    enumerate_ld_terms,
    from_letters,
    naive_letter_action,
    naive_reduce,
    run_suite,
    run_trial,
    suite_config,
    to_letters,
    w_shape,
)

from conftest import free_words, fw

seeds = st.integers(0, 2**32)


def sampler(seed, **kw):
    return Sampler(replace(SampleConfig(seed=seed), **kw))


@pytest.mark.parametrize("bad", [dict(max_index=0), dict(max_len=0), dict(seed=-1), dict(seed=2**64)])
def test_sample_config_validation(bad):
    with pytest.raises(ValueError):
        SampleConfig(**bad)


@given(seeds)
def test_generators_respect_bounds(seed):
    s = sampler(seed, max_index=4, max_len=10)
    w = s.gen_free_word()
    assert len(w) <= 10 and w.max_index() <= 4
    v = s.gen_W_word()
    assert in_W(v) and len(v) <= 10
    b = s.gen_braid_word()
    assert len(b) <= 10 and b.max_index() <= 4
    p = s.gen_sigma1_positive(7)
    assert is_sigma1_positive(p) and 1 <= len(p) <= 7
    assert 1 <= s.gen_ld_term().size <= 8


def test_W_sampler_handles_two_generators():
    s = sampler(3, max_index=2, max_len=12)
    for _ in range(200):
        assert in_W(s.gen_W_word())


def test_rejection_sampler_agrees_on_membership():
    s = sampler(5)
    for _ in range(50):
        assert in_W(s.gen_W_word_rejection())


def test_rejection_sampler_gives_up():
    s = sampler(5, max_index=1)
    with pytest.raises(RuntimeError):
        s.gen_W_word_rejection(max_tries=20)


def test_sampler_is_deterministic_and_forks_independently():
    a, b = sampler(11), sampler(11)
    assert [a.gen_braid_word() for _ in range(20)] == [b.gen_braid_word() for _ in range(20)]
    f1, f2 = sampler(11).fork("x"), sampler(99).fork("x")
    assert [f1.gen_free_word() for _ in range(20)] != [f2.gen_free_word() for _ in range(20)]
    assert sampler(11).fork("y").gen_free_word() == sampler(11).fork("y").gen_free_word()


def test_gen_ld_term_single_leaf():
    assert sampler(0, max_term_size=1).gen_ld_term() is LEAF


def test_naive_engine_examples():
    assert naive_letter_action(BraidLetter(1, 1), [1]) == [1, 2, -1]
    assert naive_letter_action(BraidLetter(2, 1), [1]) == [1]
    assert naive_letter_action(BraidLetter(1, -1), [2]) == [-2, 1, 2]
    assert naive_letter_action(BraidLetter(1, 1), [-1]) == [1, -2, -1]
    assert naive_reduce([1, 2, -2, -1, 3]) == [3]


@given(free_words)
def test_letter_round_trip(w):
    assert from_letters(to_letters(w)) == w
    assert naive_reduce(to_letters(w)) == to_letters(w)


def test_enumerate_ld_terms_counts():
    # Catalan numbers C(n-1) count terms with n leaves
    assert [len(enumerate_ld_terms(n)) for n in range(1, 7)] == [1, 1, 2, 5, 14, 42]
    assert [catalan(n) for n in range(6)] == [1, 1, 2, 5, 14, 42]
    assert len(set(enumerate_ld_terms(5))) == 14
    assert enumerate_ld_terms(2) == [Node(LEAF, LEAF)]
    with pytest.raises(ValueError):
        enumerate_ld_terms(0)


def test_w_shape():
    assert w_shape(fw((1, 1))) is None
    assert w_shape(fw((2, 3), (4, -1))) == ("G-", fw((2, 3), (4, -1)))
    assert w_shape(fw((2, 1), (1, -2), (3, 1))) == ("u x1^m v", fw((2, 1)), -2, fw((3, 1)))
    shape = w_shape(fw((2, 1), (1, 1), (3, 2), (1, 4), (2, 1)))
    assert shape == ("u x1^m z x1^n v", fw((2, 1)), 1, fw((3, 2)), 4, fw((2, 1)))


@settings(max_examples=50)
@given(seeds)
def test_w_shape_reassembles(seed):
    w = sampler(seed).gen_W_word()
    shape = w_shape(w)
    x1 = lambda k: fw((1, k))
    if shape[0] == "G-":
        back = shape[1]
    elif shape[0] == "u x1^m v":
        _, u, m, v = shape
        back = u * x1(m) * v
    else:
        _, u, m, z, n, v = shape
        back = u * x1(m) * z * x1(n) * v
    assert back == w


def test_suite_config_defaults_and_overrides():
    assert suite_config("lemma6", 1).max_index == 4
    assert suite_config("lemma5", 1).max_len == 24
    assert suite_config("lemma5", 1, max_len=3).max_len == 3


@pytest.mark.parametrize("name", SUITE_NAMES)
def test_each_suite_runs_clean(name):
    report = run_suite(name, seed=1, trials=40)
    assert report.failures == [] and report.overflows == []
    assert report.lines()[0].startswith(f"{name}: 40/40 ok")


def test_overflow_is_reported_not_raised():
    status, detail = run_trial("theorem", suite_config("theorem", 0), 3, cap=6)
    assert status in ("overflow", "ok")
    report = run_suite("theorem", seed=0, trials=30, cap=6)
    assert report.overflows and not report.failures
    assert "OVERFLOW" in "\n".join(report.lines())


def test_parallel_run_matches_serial():
    serial = run_suite("relations", seed=4, trials=60)
    parallel = run_suite("relations", seed=4, trials=60, jobs=2)
    assert serial.lines() == parallel.lines()


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("nosuch")
