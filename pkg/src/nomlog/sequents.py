"""Sequents as alpha-sets of formulas, and the proof rules over them.

A sequent stores each side deduplicated up to alpha-equivalence; membership,
removal, and sequent equality are all alpha-aware.  `check_node` verifies one
rule application; since contexts are sets, a rule instance may keep or drop
its principal formula in the premise, and both variants are accepted.  Ax is
an explicit identity rule on top of the connective rules, without which no
atomic sequent would be derivable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .atoms import Atom, AtomSet, Perm
from .errors import DerivationError
from .models import OrdinaryModel, Valuation, eval_formula
from .syntax import (
    All,
    And,
    Bot,
    Formula,
    Neg,
    Term,
    act_formula,
    alpha_eq,
    fa_formula,
    subst_formula,
)


def formula_in(f: Formula, fs: Iterable[Formula]) -> bool:
    return any(alpha_eq(f, g) for g in fs)


def dedupe(fs: Iterable[Formula]) -> tuple[Formula, ...]:
    out: list[Formula] = []
    for f in fs:
        if not formula_in(f, out):
            out.append(f)
    return tuple(out)


def without(fs: Iterable[Formula], f: Formula) -> tuple[Formula, ...]:
    return tuple(g for g in fs if not alpha_eq(g, f))


def same_formula_set(xs: Iterable[Formula], ys: Iterable[Formula]) -> bool:
    xs, ys = tuple(xs), tuple(ys)
    return all(formula_in(x, ys) for x in xs) and all(formula_in(y, xs) for y in ys)


@dataclass(frozen=True, eq=False)
class Sequent:
    left: tuple[Formula, ...]
    right: tuple[Formula, ...]

    @classmethod
    def of(cls, left: Iterable[Formula], right: Iterable[Formula]) -> "Sequent":
        return cls(dedupe(left), dedupe(right))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Sequent):
            return NotImplemented
        return same_formula_set(self.left, other.left) and same_formula_set(
            self.right, other.right
        )

    # Alpha-set equality admits no finer structural hash than the side sizes,
    # which are alpha-invariant after deduplication.
    def __hash__(self) -> int:
        return hash((len(self.left), len(self.right)))

    def __str__(self) -> str:
        left = ", ".join(str(f) for f in self.left)
        right = ", ".join(str(f) for f in self.right)
        return f"{left} |- {right}".strip()


def fa_sequent(s: Sequent) -> AtomSet:
    return AtomSet(a for f in (*s.left, *s.right) for a in fa_formula(f))


def act_sequent(p: Perm, s: Sequent) -> Sequent:
    return Sequent.of(
        tuple(act_formula(p, f) for f in s.left),
        tuple(act_formula(p, f) for f in s.right),
    )


@dataclass(frozen=True)
class Derivation:
    rule: str
    conclusion: Sequent
    premises: tuple["Derivation", ...] = ()
    principal: Formula | None = None
    witness: Term | None = None
    eigen: Atom | None = None


RULE_ARITY = {
    "BotL": 0,
    "Ax": 0,
    "AndL": 1,
    "AndR": 2,
    "NegL": 1,
    "NegR": 1,
    "AllL": 1,
    "AllR": 1,
}


def _matches_with_parts(
    premise_side: tuple[Formula, ...],
    conclusion_side: tuple[Formula, ...],
    principal: Formula,
    parts: tuple[Formula, ...],
) -> bool:
    """Premise side must be the conclusion side with the principal replaced by
    the parts; the principal itself may be kept (contexts are sets)."""
    dropped = dedupe((*without(conclusion_side, principal), *parts))
    kept = dedupe((*conclusion_side, *parts))
    return same_formula_set(premise_side, dropped) or same_formula_set(premise_side, kept)


def node_violation(d: Derivation) -> str | None:
    """None if the conclusion follows from the premises by the named rule,
    else a message naming the first violated condition."""
    if d.rule not in RULE_ARITY:
        return f"unknown rule {d.rule!r}"
    if len(d.premises) != RULE_ARITY[d.rule]:
        return f"{d.rule} takes {RULE_ARITY[d.rule]} premises, got {len(d.premises)}"
    c = d.conclusion

    if d.rule == "BotL":
        if not formula_in(Bot(), c.left):
            return "BotL needs bot on the left"
        return None

    if d.rule == "Ax":
        if d.principal is not None:
            if not formula_in(d.principal, c.left):
                return f"Ax principal {d.principal} is not on the left"
            if not formula_in(d.principal, c.right):
                return f"Ax principal {d.principal} is not on the right"
            return None
        if not any(formula_in(f, c.right) for f in c.left):
            return "Ax needs a formula shared by both sides"
        return None

    p = d.principal
    if p is None:
        return f"{d.rule} needs a principal formula"

    if d.rule == "AndL":
        if not isinstance(p, And):
            return f"AndL principal {p} is not a conjunction"
        if not formula_in(p, c.left):
            return f"AndL principal {p} is not on the left"
        prem = d.premises[0].conclusion
        if not same_formula_set(prem.right, c.right):
            return "AndL premise changed the right side"
        if not _matches_with_parts(prem.left, c.left, p, (p.left, p.right)):
            return f"AndL premise left does not decompose {p}"
        return None

    if d.rule == "AndR":
        if not isinstance(p, And):
            return f"AndR principal {p} is not a conjunction"
        if not formula_in(p, c.right):
            return f"AndR principal {p} is not on the right"
        for prem, part in zip(d.premises, (p.left, p.right)):
            if not same_formula_set(prem.conclusion.left, c.left):
                return "AndR premise changed the left side"
            if not _matches_with_parts(prem.conclusion.right, c.right, p, (part,)):
                return f"AndR premise right does not prove {part}"
        return None

    if d.rule == "NegL":
        if not isinstance(p, Neg):
            return f"NegL principal {p} is not a negation"
        if not formula_in(p, c.left):
            return f"NegL principal {p} is not on the left"
        prem = d.premises[0].conclusion
        if not same_formula_set(prem.right, dedupe((*c.right, p.body))):
            return f"NegL premise right must add {p.body}"
        dropped, kept = without(c.left, p), c.left
        if not (same_formula_set(prem.left, dropped) or same_formula_set(prem.left, kept)):
            return "NegL premise left must only discharge the principal"
        return None

    if d.rule == "NegR":
        if not isinstance(p, Neg):
            return f"NegR principal {p} is not a negation"
        if not formula_in(p, c.right):
            return f"NegR principal {p} is not on the right"
        prem = d.premises[0].conclusion
        if not same_formula_set(prem.left, dedupe((*c.left, p.body))):
            return f"NegR premise left must add {p.body}"
        dropped, kept = without(c.right, p), c.right
        if not (same_formula_set(prem.right, dropped) or same_formula_set(prem.right, kept)):
            return "NegR premise right must only discharge the principal"
        return None

    if d.rule == "AllL":
        if not isinstance(p, All):
            return f"AllL principal {p} is not a universal"
        if not formula_in(p, c.left):
            return f"AllL principal {p} is not on the left"
        if d.witness is None:
            return "AllL needs a witness term"
        inst = subst_formula(p.body, p.atom, d.witness)
        prem = d.premises[0].conclusion
        if not same_formula_set(prem.right, c.right):
            return "AllL premise changed the right side"
        kept = dedupe((*c.left, inst))
        dropped = dedupe((*without(c.left, p), inst))
        if not (same_formula_set(prem.left, kept) or same_formula_set(prem.left, dropped)):
            return f"AllL premise left must add the instance {inst}"
        return None

    if d.rule == "AllR":
        if not isinstance(p, All):
            return f"AllR principal {p} is not a universal"
        if not formula_in(p, c.right):
            return f"AllR principal {p} is not on the right"
        if d.eigen is None:
            return "AllR needs an eigen atom"
        e = d.eigen
        context_fa = AtomSet(
            a
            for f in (*c.left, *without(c.right, p))
            for a in fa_formula(f)
        )
        if e in context_fa:
            return f"AllR eigen atom {e} occurs free in the conclusion context"
        prem = d.premises[0].conclusion
        body = next((g for g in prem.right if alpha_eq(All(e, g), p)), None)
        if body is None:
            return f"AllR premise right lacks the body of {p} at eigen atom {e}"
        if not same_formula_set(prem.left, c.left):
            return "AllR premise changed the left side"
        if not _matches_with_parts(prem.right, c.right, p, (body,)):
            return "AllR premise right must only replace the principal by its body"
        return None

    raise AssertionError(d.rule)


def check_node(d: Derivation) -> bool:
    """One rule application; the premises are taken at face value."""
    return node_violation(d) is None


def check_derivation(d: Derivation) -> Sequent:
    """Check every node bottom-up; returns the root conclusion or raises a
    DerivationError whose path addresses the offending node."""

    def walk(node: Derivation, path: str) -> None:
        for i, prem in enumerate(node.premises):
            walk(prem, f"{path}.premises[{i}]" if path else f"premises[{i}]")
        message = node_violation(node)
        if message is not None:
            raise DerivationError(message, path)

    walk(d, "")
    return d.conclusion


def holds_in_ordinary(s: Sequent, model: OrdinaryModel, v: Valuation) -> bool:
    """Conjunction of the left side entails disjunction of the right side."""
    if not all(eval_formula(model, v, f) for f in s.left):
        return True
    return any(eval_formula(model, v, f) for f in s.right)
