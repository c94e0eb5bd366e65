"""Mood notation and a small English-like statement language.

Grammar::

    statement := ("All" | "No") term "are" term
               | "Some" term "are" ["not"] term
    term      := identifier

Keywords are case-insensitive; terms are case-sensitive.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .bilateral import Proposition
from .engine import FIGURES, Mood


class ParseError(ValueError):
    """Malformed input; ``position`` is a 0-based character offset."""

    def __init__(self, message: str, text: str = "", position: int | None = None):
        self.text = text
        self.position = position
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)


class StructureError(ValueError):
    """Statements that do not form a categorical syllogism."""

    def __init__(self, problems: list[str]):
        self.problems = problems
        super().__init__("not a syllogism: " + "; ".join(problems))


MOOD_RE = re.compile(r"[AEIOaeio]{3}-[1-4]")


def parse_mood(text: str) -> Mood:
    """Parse ``XYZ-n`` (case-insensitive letters, figure 1..4)."""
    s = text.strip()
    if MOOD_RE.fullmatch(s):
        letters = s[:3].upper()
        return Mood(letters[0], letters[1], letters[2], int(s[4]))
    offset = len(text) - len(text.lstrip())
    expected = ["quantifier letter"] * 3 + ["'-'", "figure digit 1-4"]
    for i, what in enumerate(expected):
        if i >= len(s):
            raise ParseError(f"expected {what}, got end of input", text, offset + i)
        ok = {
            0: s[i] in "AEIOaeio", 1: s[i] in "AEIOaeio", 2: s[i] in "AEIOaeio",
            3: s[i] == "-", 4: s[i] in "1234",
        }[i]
        if not ok:
            raise ParseError(f"expected {what}, got {s[i]!r}", text, offset + i)
    raise ParseError("unexpected trailing input", text, offset + len(expected))


_TOKEN_RE = re.compile(r"\s*([A-Za-z_][A-Za-z0-9_]*|\S)")
KEYWORDS = {"all", "no", "some", "are", "not"}


def _tokenize(text: str) -> list[tuple[str, int]]:
    tokens = []
    pos = 0
    while True:
        m = _TOKEN_RE.match(text, pos)
        if not m:
            break
        tokens.append((m.group(1), m.start(1)))
        pos = m.end()
    # a single trailing full stop is tolerated
    if tokens and tokens[-1][0] == ".":
        tokens.pop()
    return tokens


class _StatementParser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def _peek(self) -> str | None:
        return self.tokens[self.i][0] if self.i < len(self.tokens) else None

    def _fail(self, expected: str):
        if self.i < len(self.tokens):
            tok, pos = self.tokens[self.i]
            raise ParseError(f"expected {expected}, got {tok!r}", self.text, pos)
        raise ParseError(f"expected {expected}, got end of input", self.text, len(self.text))

    def _keyword(self, *words: str) -> str:
        tok = self._peek()
        if tok is None or tok.lower() not in words:
            self._fail(" or ".join(repr(w.capitalize()) for w in words))
        self.i += 1
        return tok.lower()

    def _term(self) -> str:
        tok = self._peek()
        if tok is None or not (tok[0].isalpha() or tok[0] == "_") or tok.lower() in KEYWORDS:
            self._fail("a term")
        self.i += 1
        return tok

    def statement(self) -> Proposition:
        quant = self._keyword("all", "no", "some")
        subject = self._term()
        self._keyword("are")
        negated = False
        if quant == "some" and self._peek() is not None and self._peek().lower() == "not":
            self.i += 1
            negated = True
        predicate = self._term()
        if self._peek() is not None:
            self._fail("end of statement")
        letter = {"all": "A", "no": "E", "some": "O" if negated else "I"}[quant]
        if subject == predicate:
            raise ParseError(f"subject and predicate are both {subject!r}", self.text)
        return Proposition(letter, subject, predicate)


def parse_statement(text: str) -> Proposition:
    return _StatementParser(text).statement()


def infer_figure(major: Proposition, minor: Proposition, conclusion: Proposition) -> int:
    """Figure of a syllogism whose conclusion reads ``S - P``."""
    s, p = conclusion.subject, conclusion.predicate
    problems = []
    terms = {major.subject, major.predicate, minor.subject, minor.predicate, s, p}
    if len(terms) != 3:
        problems.append(f"expected exactly three terms, found {len(terms)}: {sorted(terms)}")
    major_terms = {major.subject, major.predicate}
    minor_terms = {minor.subject, minor.predicate}
    if p not in major_terms:
        problems.append(f"major premise does not mention the predicate term {p!r}")
    if s not in minor_terms:
        problems.append(f"minor premise does not mention the subject term {s!r}")
    middle = (major_terms & minor_terms) - {s, p}
    if len(middle) != 1:
        problems.append("premises share no middle term" if not middle
                        else f"ambiguous middle term {sorted(middle)}")
    if problems:
        raise StructureError(problems)
    (m,) = middle
    rename = {s: "S", m: "M", p: "P"}
    layout = (
        (rename[major.subject], rename[major.predicate]),
        (rename[minor.subject], rename[minor.predicate]),
    )
    for figure, expected in FIGURES.items():
        if layout == expected:
            return figure
    raise StructureError([f"term positions {layout} match no figure"])  # pragma: no cover


@dataclass(frozen=True)
class ParsedInput:
    mood: Mood
    statements: tuple[Proposition, Proposition, Proposition] | None = None
    # actual term names for S, M and P when parsed from statements
    terms: dict[str, str] | None = None


def parse_syllogism(first: str, second: str, conclusion: str) -> ParsedInput:
    """Parse two premises (either order) and a conclusion."""
    a, b, c = parse_statement(first), parse_statement(second), parse_statement(conclusion)
    major, minor = a, b
    if c.predicate not in (a.subject, a.predicate) and c.predicate in (b.subject, b.predicate):
        major, minor = b, a
    figure = infer_figure(major, minor, c)
    (m,) = ({major.subject, major.predicate} & {minor.subject, minor.predicate}) - {c.subject, c.predicate}
    mood = Mood(major.quantifier, minor.quantifier, c.quantifier, figure)
    terms = {"S": c.subject, "M": m, "P": c.predicate}
    return ParsedInput(mood, (major, minor, c), terms)


def parse_input(args: list[str]) -> ParsedInput:
    """A mood (``AAA-1``) or three statements, given separately or joined by ``;``."""
    if len(args) == 1 and ";" not in args[0]:
        return ParsedInput(parse_mood(args[0]))
    parts = args if len(args) != 1 else [p for p in args[0].split(";")]
    parts = [p.strip() for p in parts if p.strip()]
    if len(parts) != 3:
        raise ParseError(f"expected a mood or three statements, got {len(parts)} statement(s)")
    return parse_syllogism(*parts)
