import pytest

from services.grammar import WordParseError, format_letters, format_word, parse_lines, parse_word
from services.mixed_braid import CrossGen, LoopGen, MixedContext, PureGen


def test_artin_words():
    word = parse_word("s1 s2^-1", strands=3)
    assert word.to_ints() == [1, -2]
    assert parse_word("  # nothing here", strands=3).is_empty()
    assert parse_word("s1 # trailing note\ns2", strands=3).to_ints() == [1, 2]


def test_mixed_words():
    word = parse_word("a1 s1 a1 s1", ctx=MixedContext(1, 2))
    assert word.letters == (LoopGen(1), CrossGen(1), LoopGen(1), CrossGen(1))
    assert parse_word("a[1,4]^-1", ctx=MixedContext(2, 2)).letters == (PureGen(1, 4, -1),)


def test_pure_generator_allows_inner_spaces():
    word = parse_word("a[1, 4]^-1 s1 a[ 3 ,4 ]", ctx=MixedContext(2, 2))
    assert word.letters == (PureGen(1, 4, -1), CrossGen(1), PureGen(3, 4))


def test_malformed_pure_generator_names_the_form():
    with pytest.raises(WordParseError) as info:
        parse_word("s1 a[1;4]", ctx=MixedContext(2, 2))
    assert info.value.column == 4
    assert "a[i,j]" in info.value.message


@pytest.mark.parametrize(
    "text,strands,column",
    [
        ("s3", 3, 1),
        ("s1 t2", 3, 4),
        ("s1^2", 3, 3),
        ("s1 a1", 3, 4),
    ],
)
def test_positioned_errors(text, strands, column):
    with pytest.raises(WordParseError) as info:
        parse_word(text, strands=strands)
    assert info.value.line == 1
    assert info.value.column == column


def test_mixed_index_errors():
    with pytest.raises(WordParseError) as info:
        parse_word("a1 a3", ctx=MixedContext(2, 2))
    assert info.value.column == 4
    with pytest.raises(WordParseError):
        parse_word("a[1,2]", ctx=MixedContext(2, 2))


def test_needs_exactly_one_context():
    with pytest.raises(ValueError):
        parse_word("s1")
    with pytest.raises(ValueError):
        parse_word("s1", strands=3, ctx=MixedContext(1, 2))


def test_parse_lines_reports_line_numbers():
    words = parse_lines("s1\n\n# comment\ns2^-1\n", strands=3)
    assert [w.to_ints() for w in words] == [[1], [-2]]
    with pytest.raises(WordParseError) as info:
        parse_lines("s1\n\ns9", strands=3)
    assert info.value.line == 3
    assert info.value.column == 1


@pytest.mark.parametrize(
    "text,kwargs",
    [
        ("s1 s2^-1 s1", {"strands": 3}),
        ("a1 s1^-1 a2^-1", {"ctx": MixedContext(2, 2)}),
        ("a[1,4]^-1 a[3,4] s1", {"ctx": MixedContext(2, 2)}),
    ],
)
def test_print_parse_round_trip(text, kwargs):
    assert format_word(parse_word(text, **kwargs)) == text


def test_unicode_printing():
    assert format_word(parse_word("s1 s2^-1", strands=3), unicode=True) == "σ₁ σ₂⁻¹"
    assert format_letters([PureGen(1, 4, -1), LoopGen(2)], unicode=True) == "a₁,₄⁻¹ a₂"
