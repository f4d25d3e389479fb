"""Terms and formulas over a first-order signature.

Binding is by plain atoms: alpha-equivalence is a derived relation decided
with swaps, not a quotient representation, and substitution is
capture-avoiding with a deterministic least-index choice of renamed binder.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .atoms import Atom, AtomSet, Carrier, Perm, fresh_atom, swap
from .errors import ArityError, UnknownSymbolError


class Signature:
    """Declared term formers and predicate formers with their arities."""

    def __init__(
        self,
        funs: dict[str, int] | None = None,
        preds: dict[str, int] | None = None,
    ) -> None:
        self.funs = dict(funs or {})
        self.preds = dict(preds or {})
        for name, arity in (*self.funs.items(), *self.preds.items()):
            if arity < 0:
                raise ArityError(f"negative arity for {name}")

    def fun_arity(self, name: str) -> int:
        try:
            return self.funs[name]
        except KeyError:
            raise UnknownSymbolError(f"unknown term former {name!r}") from None

    def pred_arity(self, name: str) -> int:
        try:
            return self.preds[name]
        except KeyError:
            raise UnknownSymbolError(f"unknown predicate former {name!r}") from None

    def fun(self, name: str, *args: "Term") -> "App":
        if len(args) != self.fun_arity(name):
            raise ArityError(f"{name} expects {self.funs[name]} arguments, got {len(args)}")
        return App(name, tuple(args))

    def pred(self, name: str, *args: "Term") -> "Pred":
        if len(args) != self.pred_arity(name):
            raise ArityError(f"{name} expects {self.preds[name]} arguments, got {len(args)}")
        return Pred(name, tuple(args))

    def validate_term(self, r: "Term") -> None:
        match r:
            case Var(_):
                pass
            case App(former, args):
                if len(args) != self.fun_arity(former):
                    raise ArityError(
                        f"{former} expects {self.funs[former]} arguments, got {len(args)}"
                    )
                for s in args:
                    self.validate_term(s)

    def validate_formula(self, f: "Formula") -> None:
        match f:
            case Bot():
                pass
            case Pred(former, args):
                if len(args) != self.pred_arity(former):
                    raise ArityError(
                        f"{former} expects {self.preds[former]} arguments, got {len(args)}"
                    )
                for s in args:
                    self.validate_term(s)
            case And(l, r):
                self.validate_formula(l)
                self.validate_formula(r)
            case Neg(b):
                self.validate_formula(b)
            case All(_, b):
                self.validate_formula(b)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Signature):
            return NotImplemented
        return self.funs == other.funs and self.preds == other.preds

    def __repr__(self) -> str:
        return f"Signature(funs={self.funs!r}, preds={self.preds!r})"


class Term:
    __slots__ = ()

    def __str__(self) -> str:
        return print_term(self)


@dataclass(frozen=True)
class Var(Term):
    atom: Atom


@dataclass(frozen=True)
class App(Term):
    former: str
    args: tuple[Term, ...] = ()


class Formula:
    __slots__ = ()

    def __str__(self) -> str:
        return print_formula(self)


@dataclass(frozen=True)
class Bot(Formula):
    pass


@dataclass(frozen=True)
class Pred(Formula):
    former: str
    args: tuple[Term, ...] = ()


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Neg(Formula):
    body: Formula


@dataclass(frozen=True)
class All(Formula):
    atom: Atom
    body: Formula


def fa_term(r: Term) -> AtomSet:
    """Atoms occurring in a term (terms bind nothing, so all are free)."""
    match r:
        case Var(a):
            return AtomSet.of(a)
        case App(_, args):
            out: Iterable[Atom] = []
            for s in args:
                out = (*out, *fa_term(s))
            return AtomSet(out)
    raise TypeError(f"not a term: {r!r}")


def fa_formula(f: Formula) -> AtomSet:
    """Free atoms of a formula; the quantifier binds its atom."""
    match f:
        case Bot():
            return AtomSet()
        case Pred(_, args):
            return AtomSet(a for s in args for a in fa_term(s))
        case And(l, r):
            return fa_formula(l) | fa_formula(r)
        case Neg(b):
            return fa_formula(b)
        case All(a, b):
            return fa_formula(b) - AtomSet.of(a)
    raise TypeError(f"not a formula: {f!r}")


def used_signature(formulas: Iterable[Formula]) -> Signature:
    """The smallest signature interpreting every symbol the formulas use."""
    funs: dict[str, int] = {}
    preds: dict[str, int] = {}

    def note(table: dict[str, int], kind: str, name: str, arity: int) -> None:
        if table.setdefault(name, arity) != arity:
            raise ArityError(f"{kind} {name} used at arities {table[name]} and {arity}")

    def walk_term(t: Term) -> None:
        if isinstance(t, App):
            note(funs, "term former", t.former, len(t.args))
            for s in t.args:
                walk_term(s)

    def walk(f: Formula) -> None:
        match f:
            case Pred(name, args):
                note(preds, "predicate", name, len(args))
                for s in args:
                    walk_term(s)
            case And(l, r):
                walk(l)
                walk(r)
            case Neg(b):
                walk(b)
            case All(_, b):
                walk(b)

    for f in formulas:
        walk(f)
    return Signature(funs=funs, preds=preds)


def atoms_of_formula(f: Formula) -> AtomSet:
    """All atoms occurring in a formula, free or binding."""
    match f:
        case Bot():
            return AtomSet()
        case Pred(_, args):
            return AtomSet(a for s in args for a in fa_term(s))
        case And(l, r):
            return atoms_of_formula(l) | atoms_of_formula(r)
        case Neg(b):
            return atoms_of_formula(b)
        case All(a, b):
            return atoms_of_formula(b) | AtomSet.of(a)
    raise TypeError(f"not a formula: {f!r}")


def act_term(p: Perm, r: Term) -> Term:
    match r:
        case Var(a):
            return Var(p(a))
        case App(former, args):
            return App(former, tuple(act_term(p, s) for s in args))
    raise TypeError(f"not a term: {r!r}")


def act_formula(p: Perm, f: Formula) -> Formula:
    """Literal renaming: permutations move bound atoms too."""
    match f:
        case Bot():
            return f
        case Pred(former, args):
            return Pred(former, tuple(act_term(p, s) for s in args))
        case And(l, r):
            return And(act_formula(p, l), act_formula(p, r))
        case Neg(b):
            return Neg(act_formula(p, b))
        case All(a, b):
            return All(p(a), act_formula(p, b))
    raise TypeError(f"not a formula: {f!r}")


def alpha_eq(f: Formula, g: Formula) -> bool:
    """Equality up to renaming of bound atoms.

    At a binder both bodies are swapped onto a common fresh atom; everywhere
    else the comparison is structural.
    """
    match (f, g):
        case (Bot(), Bot()):
            return True
        case (Pred(pf, fargs), Pred(pg, gargs)):
            return pf == pg and fargs == gargs
        case (And(fl, fr), And(gl, gr)):
            return alpha_eq(fl, gl) and alpha_eq(fr, gr)
        case (Neg(fb), Neg(gb)):
            return alpha_eq(fb, gb)
        case (All(a, fb), All(b, gb)):
            c = fresh_atom(fa_formula(fb) | fa_formula(gb) | AtomSet.of(a, b))
            return alpha_eq(act_formula(swap(c, a), fb), act_formula(swap(c, b), gb))
    return False


def subst_term(r: Term, a: Atom, s: Term) -> Term:
    """r with every occurrence of the atom a replaced by s."""
    match r:
        case Var(b):
            return s if b == a else r
        case App(former, args):
            return App(former, tuple(subst_term(t, a, s) for t in args))
    raise TypeError(f"not a term: {r!r}")


def subst_formula(f: Formula, a: Atom, s: Term) -> Formula:
    """Capture-avoiding substitution f[a := s].

    A binder that would capture an atom of s is renamed to the least fresh
    atom first, so results are deterministic, not just canonical up to alpha.
    """
    match f:
        case Bot():
            return f
        case Pred(former, args):
            return Pred(former, tuple(subst_term(t, a, s) for t in args))
        case And(l, r):
            return And(subst_formula(l, a, s), subst_formula(r, a, s))
        case Neg(b):
            return Neg(subst_formula(b, a, s))
        case All(b, body):
            if b == a:
                return f
            if b in fa_term(s):
                b2 = fresh_atom(fa_formula(body) | fa_term(s) | AtomSet.of(a, b))
                body = act_formula(swap(b, b2), body)
                return All(b2, subst_formula(body, a, s))
            return All(b, subst_formula(body, a, s))
    raise TypeError(f"not a formula: {f!r}")


def print_term(r: Term) -> str:
    match r:
        case Var(a):
            return a.name
        case App(former, args):
            return f"{former}({', '.join(print_term(s) for s in args)})"
    raise TypeError(f"not a term: {r!r}")


def _needs_parens_under_neg(f: Formula) -> bool:
    return isinstance(f, (And, All))


def print_formula(f: Formula) -> str:
    """Minimal-parentheses text: ~ binds tightest, then &, and a quantifier
    extends as far right as possible."""
    match f:
        case Bot():
            return "bot"
        case Pred(former, args):
            if not args:
                return former
            return f"{former}({', '.join(print_term(s) for s in args)})"
        case And(l, r):
            ls = print_formula(l)
            if isinstance(l, (And, All)):
                ls = f"({ls})"
            return f"{ls} & {print_formula(r)}"
        case Neg(b):
            bs = print_formula(b)
            if _needs_parens_under_neg(b):
                bs = f"({bs})"
            return f"~{bs}"
        case All(a, b):
            return f"forall {a.name}. {print_formula(b)}"
    raise TypeError(f"not a formula: {f!r}")


TERM_CARRIER: Carrier[Term] = Carrier(
    name="terms",
    act=act_term,
    eq=lambda x, y: x == y,
    support_bound=fa_term,
)

# Raw syntax: equality is structural, so even bound atoms are in the support.
FORMULA_CARRIER: Carrier[Formula] = Carrier(
    name="formulas-raw",
    act=act_formula,
    eq=lambda x, y: x == y,
    support_bound=atoms_of_formula,
)

# Up to alpha, only the free atoms matter; the bound is still the occurring
# atoms so that the swap tests genuinely discover that.
ALPHA_CARRIER: Carrier[Formula] = Carrier(
    name="formulas-alpha",
    act=act_formula,
    eq=alpha_eq,
    support_bound=atoms_of_formula,
)
