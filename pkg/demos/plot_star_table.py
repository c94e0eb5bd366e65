"""
Eliminating the middle term
===========================

``star(a, b)`` puts a major form (rows M, columns P) and a minor form (rows
M, columns S) on a three-term diagram and reads off what is left of S and P.
"""

from carroll_syllogism import star, verify_star_table
from carroll_syllogism.bilateral import format_set
from carroll_syllogism.trilateral import TABLE_ORDER

# The worked pair: M'P' inhabited on one side, SM' on the other.
print("8 * 4 =", format_set(star(8, 4)))

# Both premises say "M inhabited, M' empty" in every way: seven outcomes.
print("3 * 3 =", format_set(star(3, 3)))

# One premise empties M' while the other inhabits it: no diagram fits.
print("1 * 4 =", star(1, 4))

# Defined cells of the full table, in the conventional order.
for a in TABLE_ORDER:
    row = ["." if star(a, b) is None else str(len(star(a, b))) for b in TABLE_ORDER]
    print(f"{a:>3}", " ".join(f"{c:>2}" for c in row))

# Compare against the printed table shipped with the package.
for d in verify_star_table():
    print(f"{d.major} * {d.minor}: printed {format_set(d.expected)}, derived {format_set(d.derived)}")
