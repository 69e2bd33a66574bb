import pytest
from hypothesis import given, settings, strategies as st

from conftest import words
from twistcohom.errors import DuplicateGenerator, EmptyGeneratorList, UnknownGenerator, WordSyntaxError
from twistcohom.presentation import (
    IDENTITY,
    Presentation,
    Word,
    concat,
    invert,
    parse_presentation,
    parse_word,
    render_word,
)

GENS = ["g1", "g2", "g3"]
HUMPHRIES3 = ["c1", "b1", "c2", "b2", "c3", "b3", "a2"]


def test_parse_word_signs():
    w = parse_word("g1 g2 g3^-1 g1", GENS)
    assert len(w) == 4
    assert [s for _, s in w] == [1, 1, -1, 1]
    assert [i for i, _ in w] == [0, 1, 2, 0]


@pytest.mark.parametrize("text", ["", "   ", "\n\t"])
def test_parse_blank_is_identity(text):
    assert parse_word(text, GENS) == IDENTITY


def test_parse_chain_word():
    w = parse_word("b2 c2 b1 c1 c1 b1 c2 b2", HUMPHRIES3)
    assert len(w) == 8
    assert render_word(w, HUMPHRIES3) == "b2 c2 b1 c1 c1 b1 c2 b2"


@pytest.mark.parametrize("text, exc", [
    ("g4", UnknownGenerator),
    ("g1^2", WordSyntaxError),
    ("g1^-2", WordSyntaxError),
    ("g1^", WordSyntaxError),
    ("^-1", WordSyntaxError),
])
def test_parse_word_errors(text, exc):
    with pytest.raises(exc):
        parse_word(text, GENS)


def test_invert_examples():
    w = Word(((0, 1), (1, -1)))
    assert invert(w) == Word(((1, 1), (0, -1)))
    assert invert(IDENTITY) == IDENTITY
    assert invert(Word(((0, 1),))) == Word(((0, -1),))


def test_concat_examples():
    g1 = Word(((0, 1),))
    assert concat(g1, invert(g1)) == Word(((0, 1), (0, -1)))  # no free reduction
    w = parse_word("g2 g3^-1", GENS)
    assert concat(IDENTITY, w) == w


def test_x2_by_concat_matches_definition():
    w1 = parse_word("b2 c3 c2 b2", HUMPHRIES3)
    w2 = parse_word("b1 c2 c1 b1", HUMPHRIES3)
    x1 = concat(invert(w1), parse_word("a2", HUMPHRIES3), w1)
    x2 = concat(invert(w2), x1, w2)
    literal = ("b1^-1 c1^-1 c2^-1 b1^-1 b2^-1 c2^-1 c3^-1 b2^-1 a2 "
               "b2 c3 c2 b2 b1 c2 c1 b1")
    assert x2 == parse_word(literal, HUMPHRIES3)


@settings(max_examples=200)
@given(words(3), words(3), words(3))
def test_word_algebra(a, b, c):
    assert invert(invert(a)) == a
    assert concat(concat(a, b), c) == concat(a, concat(b, c))
    assert concat(IDENTITY, a) == a == concat(a, IDENTITY)
    assert invert(concat(a, b)) == concat(invert(b), invert(a))


@settings(max_examples=200)
@given(words(3))
def test_render_roundtrip(w):
    text = render_word(w, GENS)
    assert parse_word(text, GENS) == w
    assert parse_word("  " + text.replace(" ", "   ") + "\n", GENS) == w


def test_parse_presentation_braid():
    p = parse_presentation("a b\na b a b^-1 a^-1 b^-1\n")
    assert p.generators == ("a", "b")
    assert len(p.relators) == 1
    assert p.render(p.relators[0]) == "a b a b^-1 a^-1 b^-1"


def test_parse_presentation_comments_and_blanks():
    text = "# header\n\n  x y  # gens\n# nothing\n\nx y x^-1 y^-1   # commutator\n\n"
    p = parse_presentation(text)
    assert p.generators == ("x", "y")
    assert p.relators == (parse_word("x y x^-1 y^-1", ["x", "y"]),)


def test_parse_presentation_free_group():
    p = parse_presentation("a\n")
    assert p.generators == ("a",) and p.relators == ()


@pytest.mark.parametrize("text, exc", [
    ("a a\n", DuplicateGenerator),
    ("a b\na c\n", UnknownGenerator),
    ("# only comments\n\n", EmptyGeneratorList),
    ("", EmptyGeneratorList),
])
def test_parse_presentation_errors(text, exc):
    with pytest.raises(exc):
        parse_presentation(text)


def test_presentation_validation():
    with pytest.raises(EmptyGeneratorList):
        Presentation(())
    with pytest.raises(UnknownGenerator):
        Presentation(("a",), (Word(((1, 1),)),))
    with pytest.raises(WordSyntaxError):
        Presentation(("a^b",))


def test_presentation_text_roundtrip():
    p = parse_presentation("a b\na b a b^-1 a^-1 b^-1\na^-1 b\n")
    assert parse_presentation(p.to_text(header=["example"])) == p
