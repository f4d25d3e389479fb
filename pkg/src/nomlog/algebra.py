"""Substitution algebras and their randomized axiom suites.

A substitution algebra is a carrier with a permutation action and an
operation x[a := u] taking u from a term-like algebra U; a term-like algebra
additionally embeds atoms equivariantly via `atm` and substitutes into
itself.  The five laws:

    Suba   a[a:=u] = u                                (term-like only)
    Subid  x[a:=a] = x
    Sub#   a#x  =>  x[a:=u] = x
    Subalpha  b#x  =>  x[a:=u] = ((b a).x)[b:=u]      (a != b)
    Subsigma  a#v  =>  x[a:=u][b:=v] = x[b:=v][a:=u[b:=v]]   (a != b)

The suite establishes every freshness premise with a swap test before
evaluating a conclusion; generation is biased toward satisfying premises,
and instances that still violate one are counted as skips, never as passes.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Sequence

from .atoms import Atom, AtomSet, Carrier, fresh_atom, swap
from .gen import rand_formula, rand_lifted_bool, rand_lifted_elem, rand_term
from .lifting import atm_lift, lifted_carrier, sub_lift
from .syntax import (
    ALPHA_CARRIER,
    Signature,
    TERM_CARRIER,
    Var,
    alpha_eq,
    act_formula,
    fa_formula,
    subst_formula,
    subst_term,
)

PASS, SKIP, FAIL = "pass", "skip", "fail"


@dataclass
class SuiteReport:
    """Outcome counts for one law."""

    name: str
    passed: int = 0
    skipped: int = 0
    failed: int = 0
    counterexample: str | None = None

    def record(self, status: str, instance: Callable[[], str]) -> None:
        if status == PASS:
            self.passed += 1
        elif status == SKIP:
            self.skipped += 1
        else:
            self.failed += 1
            if self.counterexample is None:
                self.counterexample = instance()

    @property
    def ok(self) -> bool:
        return self.failed == 0


def suite_ok(reports: Sequence[SuiteReport]) -> bool:
    return all(r.ok for r in reports)


class SubstAlgebra:
    """Carrier handle plus a substitution action over a term-like algebra."""

    def __init__(
        self,
        name: str,
        *,
        carrier: Carrier,
        sub: Callable,
        generate: Callable[[random.Random], object],
        pool: Sequence[Atom],
        term_algebra: "TermlikeAlgebra | None" = None,
    ) -> None:
        self.name = name
        self.carrier = carrier
        self.sub = sub
        self.generate = generate
        self.pool = tuple(pool)
        if term_algebra is None:
            if not isinstance(self, TermlikeAlgebra):
                raise ValueError(f"{name}: a plain substitution algebra needs a term algebra")
            term_algebra = self
        self.term_algebra = term_algebra

    @property
    def eq(self):
        return self.carrier.eq

    @property
    def act(self):
        return self.carrier.act

    def is_fresh(self, a: Atom, x) -> bool:
        return self.carrier.is_fresh(a, x)

    def support(self, x) -> AtomSet:
        return self.carrier.support(x)

    def support_bound(self, x) -> AtomSet:
        return self.carrier.support_bound(x)


class TermlikeAlgebra(SubstAlgebra):
    def __init__(self, name: str, *, atm: Callable[[Atom], object], **kwargs) -> None:
        super().__init__(name, **kwargs)
        self.atm = atm


# -- individual axiom checks --------------------------------------------------


def check_suba(alg: TermlikeAlgebra, a: Atom, u) -> str:
    return PASS if alg.eq(alg.sub(alg.atm(a), a, u), u) else FAIL


def check_subid(alg: SubstAlgebra, x, a: Atom) -> str:
    return PASS if alg.eq(alg.sub(x, a, alg.term_algebra.atm(a)), x) else FAIL


def check_subhash(alg: SubstAlgebra, x, a: Atom, u) -> str:
    if not alg.is_fresh(a, x):
        return SKIP
    return PASS if alg.eq(alg.sub(x, a, u), x) else FAIL


def check_subalpha(alg: SubstAlgebra, x, a: Atom, b: Atom, u) -> str:
    if a == b or not alg.is_fresh(b, x):
        return SKIP
    lhs = alg.sub(x, a, u)
    rhs = alg.sub(alg.act(swap(b, a), x), b, u)
    return PASS if alg.eq(lhs, rhs) else FAIL


def check_subsigma(alg: SubstAlgebra, x, a: Atom, u, b: Atom, v) -> str:
    terms = alg.term_algebra
    if a == b or not terms.is_fresh(a, v):
        return SKIP
    lhs = alg.sub(alg.sub(x, a, u), b, v)
    rhs = alg.sub(alg.sub(x, b, v), a, terms.sub(u, b, v))
    return PASS if alg.eq(lhs, rhs) else FAIL


# -- the suite ----------------------------------------------------------------


def _biased_atom(rng: random.Random, pool: tuple[Atom, ...], avoid: AtomSet) -> Atom:
    """Mostly an atom fresh for `avoid`, occasionally an arbitrary pool atom
    so the skip path stays exercised."""
    if rng.random() < 0.2:
        return rng.choice(pool)
    outside = [a for a in pool if a not in avoid]
    if outside and rng.random() < 0.75:
        return rng.choice(outside)
    return fresh_atom(avoid | AtomSet(pool))


def run_axiom_suite(
    alg: SubstAlgebra, trials: int = 1000, seed: int = 0
) -> list[SuiteReport]:
    """Check the substitution laws on `trials` biased-random instances each."""
    rng = random.Random(seed)
    terms = alg.term_algebra
    termlike = isinstance(alg, TermlikeAlgebra)
    reports = {
        name: SuiteReport(name)
        for name in (
            (["Suba"] if termlike else []) + ["Subid", "Subhash", "Subalpha", "Subsigma"]
        )
    }

    for _ in range(trials):
        if termlike:
            a = rng.choice(alg.pool)
            u = terms.generate(rng)
            reports["Suba"].record(
                check_suba(alg, a, u), lambda a=a, u=u: f"a={a} u={u!r}"
            )

        x = alg.generate(rng)
        a = rng.choice(alg.pool)
        reports["Subid"].record(check_subid(alg, x, a), lambda x=x, a=a: f"x={x!r} a={a}")

        x = alg.generate(rng)
        a = _biased_atom(rng, alg.pool, alg.support_bound(x))
        u = terms.generate(rng)
        reports["Subhash"].record(
            check_subhash(alg, x, a, u), lambda x=x, a=a, u=u: f"x={x!r} a={a} u={u!r}"
        )

        x = alg.generate(rng)
        a = rng.choice(alg.pool)
        b = _biased_atom(rng, alg.pool, alg.support_bound(x))
        u = terms.generate(rng)
        reports["Subalpha"].record(
            check_subalpha(alg, x, a, b, u),
            lambda x=x, a=a, b=b, u=u: f"x={x!r} a={a} b={b} u={u!r}",
        )

        x = alg.generate(rng)
        b = rng.choice(alg.pool)
        v = terms.generate(rng)
        a = _biased_atom(rng, alg.pool, terms.support_bound(v) | AtomSet.of(b))
        u = terms.generate(rng)
        reports["Subsigma"].record(
            check_subsigma(alg, x, a, u, b, v),
            lambda x=x, a=a, b=b, u=u, v=v: f"x={x!r} a={a} u={u!r} b={b} v={v!r}",
        )

    return list(reports.values())


# -- built-in instances --------------------------------------------------------


def atoms_algebra(pool: Sequence[Atom]) -> TermlikeAlgebra:
    """Atoms substitute into themselves: a[a:=u] = u, b[a:=u] = b."""
    from .atoms import ATOM_CARRIER

    pool = tuple(pool)
    return TermlikeAlgebra(
        "atoms",
        carrier=ATOM_CARRIER,
        sub=lambda x, a, u: u if x == a else x,
        generate=lambda rng: rng.choice(pool),
        pool=pool,
        atm=lambda a: a,
    )


def term_algebra(sig: Signature, pool: Sequence[Atom], depth: int = 3) -> TermlikeAlgebra:
    return TermlikeAlgebra(
        "terms",
        carrier=TERM_CARRIER,
        sub=subst_term,
        generate=lambda rng: rand_term(rng, sig, pool, depth),
        pool=tuple(pool),
        atm=Var,
    )


def formula_algebra(
    sig: Signature,
    pool: Sequence[Atom],
    depth: int = 3,
    subst: Callable = subst_formula,
) -> SubstAlgebra:
    """Formulas up to alpha over the term algebra.  Not term-like: there is
    no atom embedding into formulas.  `subst` is a parameter so that a broken
    substitution can be put under the same suite."""
    carrier = Carrier(
        name="formulas-alpha",
        act=act_formula,
        eq=alpha_eq,
        support_bound=fa_formula,
    )
    return SubstAlgebra(
        "formulas",
        carrier=carrier,
        sub=subst,
        generate=lambda rng: rand_formula(rng, sig, pool, depth),
        pool=tuple(pool),
        term_algebra=term_algebra(sig, pool, depth),
    )


def lifted_term_algebra(
    carrier: Sequence[int], pool: Sequence[Atom], max_deps: int = 2
) -> TermlikeAlgebra:
    carrier = tuple(carrier)
    return TermlikeAlgebra(
        f"lifted-elems[{len(carrier)}]",
        carrier=lifted_carrier(carrier),
        sub=sub_lift,
        generate=lambda rng: rand_lifted_elem(rng, carrier, pool, max_deps),
        pool=tuple(pool),
        atm=lambda a: atm_lift(carrier, a),
    )


def lifted_bool_algebra(
    carrier: Sequence[int], pool: Sequence[Atom], max_deps: int = 2
) -> SubstAlgebra:
    carrier = tuple(carrier)
    return SubstAlgebra(
        f"lifted-bools[{len(carrier)}]",
        carrier=lifted_carrier(carrier),
        sub=sub_lift,
        generate=lambda rng: rand_lifted_bool(rng, carrier, pool, max_deps),
        pool=tuple(pool),
        term_algebra=lifted_term_algebra(carrier, pool, max_deps),
    )
