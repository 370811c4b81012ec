import itertools

import numpy as np
import pytest
from hypothesis import given, settings

from services.braid_core import BraidWord, StrandMismatchError, concat, identity, inverse
from services.permutation import Permutation
from services.word_problem import (
    NormalForm,
    burau_matrix,
    cross_check,
    equal,
    finishing_set,
    is_left_weighted,
    is_trivial,
    left_normal_form,
    normal_form_to_word,
    starting_set,
)
from strategies import artin_words, perturbed


def w(strands, *letters):
    return BraidWord.from_ints(strands, letters)


def test_half_twist_and_powers():
    assert left_normal_form(w(3, 1, 2, 1)) == NormalForm(3, 1, ())
    assert left_normal_form(w(2, 1, 1)) == NormalForm(2, 2, ())
    assert left_normal_form(w(2, -1)) == NormalForm(2, -1, ())


def test_negative_letter():
    nf = left_normal_form(w(3, -1))
    assert nf.delta_power == -1
    assert nf.factors == (Permutation((3, 1, 2)),)
    assert nf.infimum == -1 and nf.supremum == 0


def test_positive_words():
    assert left_normal_form(w(3, 1, 2)).factors == (Permutation((3, 1, 2)),)
    assert left_normal_form(w(3, 2, 1)).factors == (Permutation((2, 3, 1)),)
    square = left_normal_form(w(3, 1, 1))
    assert square.factors == (Permutation((2, 1, 3)), Permutation((2, 1, 3)))
    assert square.canonical_length == 2


def test_trivial_braids():
    assert left_normal_form(identity(4)) == NormalForm(4, 0, ())
    assert left_normal_form(identity(1)) == NormalForm(1, 0, ())
    assert is_trivial(w(3, 1, -1, 2, -2))
    assert is_trivial(w(3, 1, 2, 1, -2, -1, -2))


def test_record_layout():
    assert left_normal_form(w(3, 1, 2, 1)).to_record() == {"strands": 3, "delta_power": 1, "factors": []}
    assert left_normal_form(w(3, 1, 2)).to_record()["factors"] == [[3, 1, 2]]


def test_equality():
    assert equal(w(3, 1, 2, 1), w(3, 2, 1, 2))
    assert equal(w(4, 1, 3), w(4, 3, 1))
    assert not equal(w(3, 1, 2), w(3, 2, 1))
    assert not equal(w(3, 1, 2, -1), w(3, 2))
    assert equal(w(3, 1, 2, -1), w(3, -2, 1, 2))
    with pytest.raises(StrandMismatchError):
        equal(identity(2), identity(3))


def test_starting_and_finishing_sets():
    p = Permutation((3, 1, 2))
    assert starting_set(p) == frozenset({1})
    assert finishing_set(p) == frozenset({2})
    assert is_left_weighted(Permutation((2, 1, 3)), Permutation((2, 1, 3)))
    assert not is_left_weighted(Permutation((2, 1, 3)), Permutation((1, 3, 2)))


def test_burau_blocks():
    assert burau_matrix(w(2, 1)).tolist() == [[2, -1], [1, 0]]
    assert burau_matrix(w(2, -1)).tolist() == [[0, 1], [-1, 2]]
    assert np.array_equal(burau_matrix(w(3, 1, -1)), burau_matrix(identity(3)))
    assert cross_check(w(3, 1, 2, 1), w(3, 2, 1, 2))


@given(artin_words(4, max_size=16))
def test_normal_form_is_left_weighted_and_faithful(word):
    nf = left_normal_form(word)
    delta = Permutation.reversal(4)
    for first, second in zip(nf.factors, nf.factors[1:]):
        assert is_left_weighted(first, second)
    assert all(f != delta and not f.is_identity() for f in nf.factors)
    rebuilt = normal_form_to_word(nf)
    assert left_normal_form(rebuilt) == nf
    assert cross_check(rebuilt, word)


@given(artin_words(4, max_size=10), artin_words(4, max_size=10))
def test_inverse_cancels(u, v):
    assert is_trivial(concat(u, inverse(u)))
    assert equal(concat(u, v, inverse(v)), u)


@settings(max_examples=200)
@given(artin_words(5, max_size=12).flatmap(lambda u: perturbed(u).map(lambda v: (u, v))))
def test_relator_insertion_keeps_the_braid(pair):
    u, v = pair
    assert equal(u, v)
    assert cross_check(u, v)


@settings(max_examples=1000)
@given(artin_words(4, max_size=10), artin_words(4, max_size=10))
def test_equal_implies_burau_equal(u, v):
    if equal(u, v):
        assert cross_check(u, v)


# The braid relation of B_3 together with its conjugation variants; each
# pair is a rewrite that keeps the word length.
_B3_MOVES = [
    ((1, 2, 1), (2, 1, 2)),
    ((-1, -2, -1), (-2, -1, -2)),
    ((1, 2, -1), (-2, 1, 2)),
    ((2, 1, -2), (-1, 2, 1)),
    ((1, -2, -1), (-2, -1, 2)),
    ((2, -1, -2), (-1, -2, 1)),
]
_B3_REWRITES = {**dict(_B3_MOVES), **{rhs: lhs for lhs, rhs in _B3_MOVES}}


def _b3_words(max_length):
    return [
        tuple(letters)
        for length in range(max_length + 1)
        for letters in itertools.product((1, -1, 2, -2), repeat=length)
    ]


def _b3_neighbours(word):
    for k in range(len(word) - 1):
        if word[k] == -word[k + 1]:
            yield word[:k] + word[k + 2 :]
    for k in range(len(word) - 2):
        replacement = _B3_REWRITES.get(word[k : k + 3])
        if replacement is not None:
            yield word[:k] + replacement + word[k + 3 :]


def _b3_rewrite_classes(max_length):
    """Union-find over words of length <= max_length joined by cancellations and moves.

    A cancellation read backwards is an insertion, so words may pass through
    longer intermediate forms up to ``max_length``.
    """
    parent = {word: word for word in _b3_words(max_length)}

    def find(word):
        while parent[word] != word:
            parent[word] = parent[parent[word]]
            word = parent[word]
        return word

    for word in parent:
        for other in _b3_neighbours(word):
            parent[find(word)] = find(other)
    return find


def test_b3_rewriting_never_joins_distinct_braids():
    words = _b3_words(4)
    find = _b3_rewrite_classes(4)
    classes = {}
    for word in words:
        classes.setdefault(find(word), set()).add(left_normal_form(BraidWord.from_ints(3, word)))
    assert all(len(nfs) == 1 for nfs in classes.values())


def test_b3_equal_words_are_connected_by_rewrites():
    words = _b3_words(4)
    find = _b3_rewrite_classes(8)
    roots_by_form = {}
    for word in words:
        form = left_normal_form(BraidWord.from_ints(3, word))
        roots_by_form.setdefault(form, set()).add(find(word))
    disconnected = {form: roots for form, roots in roots_by_form.items() if len(roots) > 1}
    assert not disconnected
