import pytest
from hypothesis import given, settings, strategies as st

from services.braid_core import BraidWord, concat, identity
from services.combing import (
    CombedFactor,
    KernelWordError,
    NotPureError,
    comb,
    combed_to_word,
    equal_via_combing,
    extract_kernel_word,
)
from services.free_group import reduce_word
from services.mixed_braid import MixedContext, MixedWord, PureGen, expand_mixed, expand_pure_gen
from services.presentations import enumerate_generators
from services.word_problem import equal
from strategies import perturbed, pure_members

COMBING_CONTEXTS = [MixedContext(1, 2), MixedContext(2, 2), MixedContext(2, 3)]
# Loop words grow quickly with the Artin length of the input.
MAX_LETTERS = 24


def test_kernel_words():
    a13, a23 = expand_pure_gen(1, 3, 3), expand_pure_gen(2, 3, 3)
    a13_inv = expand_pure_gen(1, 3, 3, sign=-1)
    assert extract_kernel_word(a13, 3) == (PureGen(1, 3),)
    assert extract_kernel_word(concat(a13, a23), 3) == (PureGen(1, 3), PureGen(2, 3))
    assert extract_kernel_word(concat(a13_inv, a23), 3) == (PureGen(1, 3, -1), PureGen(2, 3))
    assert extract_kernel_word(identity(3), 3) == ()


def test_kernel_word_rejects_other_braids():
    with pytest.raises(KernelWordError):
        extract_kernel_word(BraidWord.from_ints(3, [1, 1]), 3)
    with pytest.raises(KernelWordError):
        extract_kernel_word(BraidWord.from_ints(3, [2]), 3)
    with pytest.raises(KernelWordError):
        extract_kernel_word(identity(3), 1)


def test_comb_small_example(ctx12):
    word = expand_mixed(MixedWord(ctx12, (PureGen(1, 2), PureGen(1, 3))))
    form = comb(word, ctx12)
    assert form.factors == (
        CombedFactor(2, (PureGen(1, 2),)),
        CombedFactor(3, (PureGen(1, 3),)),
    )
    assert form.factor(3) == (PureGen(1, 3),)
    assert form.to_record() == {
        "m": 1,
        "n": 2,
        "factors": [
            {"strand": 2, "word": [[1, 2, 1]]},
            {"strand": 3, "word": [[1, 3, 1]]},
        ],
    }


def test_comb_identity_and_generators(ctx22):
    assert comb(identity(4), ctx22).is_identity()
    for i, j in enumerate_generators(2, 2):
        form = comb(expand_pure_gen(i, j, 4), ctx22)
        for factor in form.factors:
            expected = (PureGen(i, j),) if factor.strand == j else ()
            assert factor.letters == expected


def test_comb_rejects_impure_braids(ctx22):
    with pytest.raises(NotPureError):
        comb(BraidWord.from_ints(4, [3]), ctx22)
    with pytest.raises(NotPureError):
        comb(BraidWord.from_ints(4, [1, 1]), ctx22)


def _check_form(form):
    for factor in form.factors:
        for letter in factor.letters:
            assert letter.j == factor.strand and letter.i < factor.strand
        for a, b in zip(factor.letters, factor.letters[1:]):
            assert not (a.i == b.i and a.sign == -b.sign)


@pytest.mark.parametrize("ctx", COMBING_CONTEXTS, ids=str)
def test_comb_round_trip(ctx):
    @settings(max_examples=60)
    @given(pure_members(ctx, max_size=6, max_letters=MAX_LETTERS))
    def check(word):
        form = comb(word, ctx)
        _check_form(form)
        assert [f.strand for f in form.factors] == list(ctx.moving)
        assert equal(combed_to_word(form), word)

    check()


@pytest.mark.parametrize("ctx", COMBING_CONTEXTS, ids=str)
def test_combing_decides_equality(ctx):
    @settings(max_examples=60)
    @given(st.data())
    def check(data):
        u = data.draw(pure_members(ctx, max_size=5, max_letters=MAX_LETTERS))
        others = pure_members(ctx, max_size=5, max_letters=MAX_LETTERS)
        v = data.draw(st.one_of(others, perturbed(u)))
        assert equal_via_combing(u, v, ctx) == equal(u, v)

    check()


@pytest.mark.slow
@pytest.mark.parametrize("ctx", COMBING_CONTEXTS, ids=str)
def test_combing_acceptance_sweep(ctx):
    @settings(max_examples=500)
    @given(st.data())
    def check(data):
        u = data.draw(pure_members(ctx, max_size=8, max_letters=MAX_LETTERS))
        form = comb(u, ctx)
        _check_form(form)
        assert equal(combed_to_word(form), u)
        others = pure_members(ctx, max_size=8, max_letters=MAX_LETTERS)
        v = data.draw(st.one_of(others, perturbed(u)))
        assert equal_via_combing(u, v, ctx) == equal(u, v)

    check()


def _signed(letters):
    return [g.i * g.sign for g in letters]


@pytest.mark.parametrize("ctx", COMBING_CONTEXTS, ids=str)
def test_top_strand_loops_only_change_the_last_factor(ctx):
    top = ctx.strands
    loops = [PureGen(i, top, s) for i in range(1, top) for s in (1, -1)]

    @settings(max_examples=40)
    @given(
        pure_members(ctx, max_size=4, max_letters=12),
        st.lists(st.sampled_from(loops), max_size=3),
    )
    def check(word, extra):
        before = comb(word, ctx)
        after = comb(concat(word, expand_mixed(MixedWord(ctx, tuple(extra)))), ctx)
        assert after.factors[:-1] == before.factors[:-1]
        expected = reduce_word(_signed(before.factor(top)) + _signed(extra))
        assert _signed(after.factor(top)) == list(expected)

    check()


_LOOPS_AROUND_THREE = [PureGen(i, 4, s) for i in (1, 2, 3) for s in (1, -1)]


@settings(max_examples=100)
@given(st.lists(st.sampled_from(_LOOPS_AROUND_THREE), max_size=8))
def test_single_moving_strand_combs_to_free_reduction(letters):
    ctx = MixedContext(3, 1)
    form = comb(expand_mixed(MixedWord(ctx, tuple(letters))), ctx)
    reduced = reduce_word(_signed(letters))
    assert form.factors == (
        CombedFactor(4, tuple(PureGen(abs(x), 4, 1 if x > 0 else -1) for x in reduced)),
    )
