"""
Denotations as dependency tables, and countermodel search
=========================================================

Over a finite carrier, a formula with free atoms a1..an denotes a table: one
boolean per assignment of carrier elements to those atoms.  Closed formulas
denote constants, so validity needs no quantification over valuations.
"""

from nomlog import (
    countermodel_search,
    denote_formula,
    dump_lifted,
    is_valid,
    load_model,
    parse_formula,
    parse_sequent,
)

# A two-element model: P holds of 0 only, f swaps the elements.
model = load_model("""
carrier 0 1
fun f: (0) -> 1, (1) -> 0
pred P: 0
""")

# P(a) depends on a; its table reads off P.
f = parse_formula("P(a)", model.signature())
print(dump_lifted(denote_formula(model, f)))
print()

# P(a) & ~P(f(a)) happens to coincide with P(a) in this model: canonical
# tables make that a plain equality.
g = parse_formula("P(a) & ~P(f(a))", model.signature())
print(dump_lifted(denote_formula(model, g)))
print("same table:", denote_formula(model, f) == denote_formula(model, g))
print()

# The quantifier discards its atom: forall a. P(a) is a constant table.
h = parse_formula("forall a. ~(P(a) & ~P(a))", model.signature())
print("valid here:", is_valid(model, h))

# Exhaustive search over small models.  Specialising a hypothesis P(a) to
# its own universal closure is unsound, and a two-element model already
# witnesses that.
seq = parse_sequent("P(a) |- forall a. P(a)")
found = countermodel_search(seq, max_size=2)
print()
print("countermodel for", seq)
print(found.report())

# A derivable sequent has no countermodel at any size we try.
print()
print("search |- ~bot up to size 3:", countermodel_search(parse_sequent("|- ~bot"), 3))
