"""
Possible forms of a two-term diagram
====================================

A categorical statement pins one cell of a 2x2 Carroll diagram. The other
three cells are free, so each statement has eight possible forms.
"""

from carroll_syllogism import Orientation, Proposition, proposition_form_set, render_bilateral
from carroll_syllogism.bilateral import format_set, transpose_set
from carroll_syllogism.render import constraint_cells

xy = Orientation(row="Y", col="X")

for q in "AEIO":
    prop = Proposition(q, "X", "Y")
    print(prop)
    print(render_bilateral(constraint_cells(prop, xy), "Y", "X"))
    print("forms:", format_set(proposition_form_set(prop, xy)))
    print()

# A single form, drawn in full. 8 is the diagram with only X'Y' inhabited.
print(render_bilateral(8, "Y", "X"))

# Converting "No X are Y" into "No Y are X" reflects the diagram.
no_xy = proposition_form_set(Proposition("E", "X", "Y"), xy)
no_yx = proposition_form_set(Proposition("E", "Y", "X"), xy)
print(format_set(transpose_set(no_xy)), "==", format_set(no_yx))
