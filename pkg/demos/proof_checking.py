"""
Checking sequent derivations
============================

Derivations are explicit trees: each node names its rule, its principal
formula, and (for the quantifier rules) a witness term or an eigenatom.
The checker validates one rule application at a time and reports the path
to the first bad node.
"""

from nomlog import DerivationError, check_derivation, format_proof, load_proof

# A derivation of  |- ~(P(a) & ~P(a)),  working upwards: NegR moves the
# negated formula to the left, AndL splits it, NegL moves ~P(a) back to the
# right, and the two copies of P(a) meet in an axiom.
text = """
(NegR (principal "~(P(a) & ~P(a))")
  (premise (AndL (principal "P(a) & ~P(a)")
    (premise (NegL (principal "~P(a)")
      (premise (Ax (concl "P(a) |- P(a)") (principal "P(a)"))))))))
"""

d = load_proof(text)
check_derivation(d)
print("checked:", d.conclusion)
print()

# Only leaves need explicit conclusions; the loader inferred the rest.
# Formatting writes every conclusion back out.
print(format_proof(d))
print()

# Break a leaf: claim an axiom on a formula that is not on both sides.
broken = '(Ax (concl "P(b) |- P(a)") (principal "P(a)"))'
try:
    check_derivation(load_proof(broken))
except DerivationError as e:
    print("rejected:", e)

# The quantifier-right rule guards its eigenatom.  Here the eigenatom b is
# free in the remaining right-hand side, so the step is unsound and refused.
bad_eigen = """
(AllR (concl "bot |- forall a. P(a), P(b)") (principal "forall a. P(a)") (eigen b)
  (premise (BotL (concl "bot |- P(b)"))))
"""
try:
    check_derivation(load_proof(bad_eigen))
except DerivationError as e:
    print("rejected:", e)
