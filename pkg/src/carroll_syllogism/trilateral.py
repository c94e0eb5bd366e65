"""Three-term diagrams and the possible-conclusion operation ``star``.

A trilateral assignment is an 8-bit integer.  Region ``(s, m, p)``, where
each coordinate is 1 inside the term and 0 inside its complement, lives at
bit ``4*s + 2*m + p``.

``star(a, b)`` takes a major form ``a`` (rows M, columns P) and a minor
form ``b`` (rows M, columns S).  It enumerates every assignment whose
bilateral shadows are exactly ``a`` and ``b`` and collects the resulting
S/P forms.  The first elimination rule is the consistency test: a 0 cell
empties both of its sub-regions, an occupied cell needs at least one
occupied sub-region.  The second and third rules are the projection.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .bilateral import FormSet, cell_weight

# Column order used by the published operation table.
TABLE_ORDER = (0, 1, 2, 3, 4, 8, 12, 5, 10, 6, 9, 7, 11, 13, 14, 15)

_BITS = (0, 1)


def region_bit(s: int, m: int, p: int) -> int:
    return 1 << (4 * s + 2 * m + p)


def occupied(asg: int, s: int, m: int, p: int) -> bool:
    return bool(asg & region_bit(s, m, p))


def major_shadow(asg: int) -> int:
    """Form over rows M / columns P."""
    form = 0
    for m, p in itertools.product(_BITS, _BITS):
        if occupied(asg, 0, m, p) or occupied(asg, 1, m, p):
            form |= cell_weight(p, m)
    return form


def minor_shadow(asg: int) -> int:
    """Form over rows M / columns S."""
    form = 0
    for m, s in itertools.product(_BITS, _BITS):
        if occupied(asg, s, m, 0) or occupied(asg, s, m, 1):
            form |= cell_weight(s, m)
    return form


def project(asg: int) -> int:
    """Eliminate the middle term: the resulting form over rows S / columns P.

    A quarter is occupied when either of its M / M' halves is, and empty
    when both halves are.
    """
    form = 0
    for s, p in itertools.product(_BITS, _BITS):
        if occupied(asg, s, 0, p) or occupied(asg, s, 1, p):
            form |= cell_weight(p, s)
    return form


def consistent(major: int, minor: int, asg: int) -> bool:
    """Whether ``asg`` realizes both premise forms cell for cell."""
    return major_shadow(asg) == major and minor_shadow(asg) == minor


@lru_cache(maxsize=1)
def _assignment_shadows() -> tuple[tuple[int, int, int], ...]:
    """(major form, minor form, S/P form) of every assignment."""
    return tuple(
        (major_shadow(asg), minor_shadow(asg), project(asg)) for asg in range(256)
    )


@lru_cache(maxsize=None)
def star(a: int, b: int) -> FormSet | None:
    """Possible conclusions of major form ``a`` and minor form ``b``.

    Returns ``None`` when no assignment realizes both forms (a blank cell
    in the operation table).
    """
    if not (0 <= a <= 15 and 0 <= b <= 15):
        raise ValueError(f"form values must lie in 0..15, got {a}, {b}")
    result = frozenset(
        sp for major, minor, sp in _assignment_shadows() if major == a and minor == b
    )
    return result or None


def star_table() -> dict[tuple[int, int], FormSet | None]:
    return {(a, b): star(a, b) for a in range(16) for b in range(16)}


def middle_conflict(a: int, b: int) -> bool:
    """Whether the two forms disagree about M or M' being inhabited.

    This is a closed-form test of undefinedness that does not enumerate
    assignments.
    """
    major_mp, major_mbar = a & 0b0011, a & 0b1100
    minor_mp, minor_mbar = b & 0b0011, b & 0b1100
    return bool(major_mp) != bool(minor_mp) or bool(major_mbar) != bool(minor_mbar)


DEFAULT_FIXTURE = "star_table.txt"


def load_star_fixture(path: str | Path | None = None) -> dict[tuple[int, int], FormSet]:
    """Read the operation table fixture.

    Format: ``#`` comments, then one line per defined entry,
    ``<major> <minor> : <member> <member> ...``.  Missing pairs are blank.
    """
    if path is None:
        text = resources.files(__package__).joinpath("data", DEFAULT_FIXTURE).read_text()
    else:
        text = Path(path).read_text()
    table = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            head, members = line.split(":")
            a, b = (int(x) for x in head.split())
            values = frozenset(int(x) for x in members.split())
        except ValueError as exc:
            raise ValueError(f"bad fixture line {lineno}: {raw!r}") from exc
        if (a, b) in table:
            raise ValueError(f"duplicate fixture entry ({a}, {b}) on line {lineno}")
        table[(a, b)] = values
    return table


@dataclass(frozen=True)
class StarMismatch:
    major: int
    minor: int
    expected: FormSet | None
    derived: FormSet | None


def verify_star_table(fixture: dict[tuple[int, int], FormSet] | None = None) -> list[StarMismatch]:
    """Compare the derived operation against the fixture on all 256 pairs."""
    if fixture is None:
        fixture = load_star_fixture()
    diff = []
    for a, b in itertools.product(range(16), range(16)):
        expected = fixture.get((a, b))
        derived = star(a, b)
        if expected != derived:
            diff.append(StarMismatch(a, b, expected, derived))
    return diff
