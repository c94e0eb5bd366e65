"""
Existential import and the comparison rule
==========================================

"Some S are P" cannot follow from two universal premises unless S is
assumed to exist. Here is what the existence constant does to the minor
premise of AAI-1, and why the conclusion check has to be an inclusion test.
"""

from carroll_syllogism import Condition, EngineConfig, Mood, decide, interpret_premise
from carroll_syllogism.bilateral import existence_constant, format_set

print("existence constant:", format_set(existence_constant()))

plain = interpret_premise("A", "minor", 1)
with_s = interpret_premise("A", "minor", 1, Condition.S_EXISTS)
print("All S are M:", format_set(plain))
print("... and S exists:", format_set(with_s))

darapti = Mood("A", "A", "I", 1)
v = decide(darapti, Condition.S_EXISTS)
print(darapti, "premises allow", format_set(v.premises_conclusion))
print("entailed conclusions:", v.entailed, "valid:", v.valid)

# Requiring the premise set to *equal* the conclusion set rejects it.
literal = EngineConfig(comparison="equality")
print("with equality:", decide(darapti, Condition.S_EXISTS, literal).valid)
