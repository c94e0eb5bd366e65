import pytest

from carroll_syllogism.bilateral import Proposition
from carroll_syllogism.engine import Mood, all_moods
from carroll_syllogism.parsing import (
    ParseError,
    StructureError,
    infer_figure,
    parse_input,
    parse_mood,
    parse_statement,
    parse_syllogism,
)


def test_parse_mood_examples():
    assert parse_mood("AAA-1") == Mood("A", "A", "A", 1)
    assert parse_mood("eio-3") == Mood("E", "I", "O", 3)


@pytest.mark.parametrize("text, position", [
    ("AAAA-1", 3),
    ("AA-1", 2),
    ("AXA-1", 1),
    ("AAA-5", 4),
    ("AAA", 3),
    ("AAA-12", 5),
    ("  AAB-1", 4),
])
def test_parse_mood_errors_carry_position(text, position):
    with pytest.raises(ParseError) as info:
        parse_mood(text)
    assert info.value.position == position


def test_mood_round_trip():
    for mood in all_moods():
        assert parse_mood(str(mood)) == mood
        assert parse_mood(str(mood).lower()) == mood


@pytest.mark.parametrize("text, prop", [
    ("All M are P", Proposition("A", "M", "P")),
    ("No S are P", Proposition("E", "S", "P")),
    ("Some S are P", Proposition("I", "S", "P")),
    ("Some S are not P", Proposition("O", "S", "P")),
    ("some dogs ARE NOT cats.", Proposition("O", "dogs", "cats")),
    ("ALL greeks are mortal", Proposition("A", "greeks", "mortal")),
])
def test_parse_statement(text, prop):
    assert parse_statement(text) == prop


def test_terms_are_case_sensitive():
    assert parse_statement("All m are M") == Proposition("A", "m", "M")


@pytest.mark.parametrize("text, token", [
    ("Most S are P", "'Most'"),
    ("All S is P", "'is'"),
    ("All S are not P", "'not'"),
    ("All S are", "end of input"),
    ("Some S are P extra", "'extra'"),
    ("No are P", "'are'"),
])
def test_parse_statement_errors(text, token):
    with pytest.raises(ParseError, match=token):
        parse_statement(text)


def test_subject_equals_predicate():
    with pytest.raises(ParseError, match="both"):
        parse_statement("All S are S")


def p(text):
    return parse_statement(text)


@pytest.mark.parametrize("major, minor, figure", [
    ("All M are P", "All S are M", 1),
    ("No P are M", "All S are M", 2),
    ("All M are P", "Some M are S", 3),
    ("All P are M", "All M are S", 4),
])
def test_infer_figure(major, minor, figure):
    assert infer_figure(p(major), p(minor), p("All S are P")) == figure


def test_infer_figure_errors():
    with pytest.raises(StructureError, match="middle"):
        infer_figure(p("All A are P"), p("All S are B"), p("All S are P"))
    with pytest.raises(StructureError, match="three terms"):
        infer_figure(p("All M are P"), p("All S are Q"), p("All S are P"))
    with pytest.raises(StructureError, match="predicate"):
        infer_figure(p("All M are Q"), p("All S are M"), p("All S are P"))


def test_parse_syllogism_with_real_terms():
    parsed = parse_syllogism("All men are mortal", "All greeks are men", "All greeks are mortal")
    assert parsed.mood == Mood("A", "A", "A", 1)
    assert parsed.terms == {"S": "greeks", "M": "men", "P": "mortal"}


def test_premises_in_either_order():
    a = parse_syllogism("All M are P", "Some S are M", "Some S are P")
    b = parse_syllogism("Some S are M", "All M are P", "Some S are P")
    assert a.mood == b.mood == Mood("A", "I", "I", 1)


def test_parse_input_dispatch():
    assert parse_input(["aai-4"]).mood == Mood("A", "A", "I", 4)
    joined = parse_input(["All P are M; All M are S; Some S are P"])
    assert joined.mood == Mood("A", "A", "I", 4)
    with pytest.raises(ParseError):
        parse_input(["All M are P", "All S are M"])
