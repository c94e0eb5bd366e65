"""
Deciding all 256 moods
======================

Each premise becomes a set of possible forms, the two sets are combined
with ``star``, and the result is compared with the form set of the
conclusion.
"""

from carroll_syllogism import Condition, Mood, decide, enumerate_valid, semantically_valid
from carroll_syllogism.bilateral import format_set

barbara = Mood("A", "A", "A", 1)
v = decide(barbara)
print(barbara, v.valid, format_set(v.premises_conclusion))

# Valid without any existence assumption: the 15 classical moods.
for mood, _ in enumerate_valid():
    print(mood, end="  ")
print()

# Strengthened moods, valid only once a term is assumed to be inhabited.
for cond in (Condition.S_EXISTS, Condition.M_EXISTS, Condition.P_EXISTS):
    found = [str(m) for m, _ in enumerate_valid(cond, only_conditional=True)]
    print(f"{cond}: {', '.join(found)}")

# Each verdict agrees with a sweep over all 256 region models.
agree = sum(
    decide(m, c).valid == semantically_valid(m, c)
    for c in Condition
    for m in (Mood(a, b, k, f) for f in range(1, 5) for a in "AEIO" for b in "AEIO" for k in "AEIO")
)
print(agree, "of 1024 verdicts agree")
