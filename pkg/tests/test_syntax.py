import pytest
from hypothesis import given

from nomlog import (
    All,
    And,
    App,
    ArityError,
    Atom,
    AtomSet,
    Bot,
    Neg,
    Pred,
    Signature,
    UnknownSymbolError,
    Var,
    act_formula,
    act_term,
    alpha_eq,
    fa_formula,
    fa_term,
    subst_formula,
    subst_term,
    swap,
    used_signature,
)

from .strategies import atoms, formulas, perms, terms

a, b, c, d = (Atom(i) for i in range(4))


def P(t):
    return Pred("P", (t,))


def test_fa_term():
    t = App("g", (Var(a), App("f", (Var(b),))))
    assert fa_term(t) == AtomSet.of(a, b)
    assert fa_term(App("c", ())) == AtomSet()


def test_fa_formula_binding():
    f = All(a, And(P(Var(a)), P(Var(b))))
    assert fa_formula(f) == AtomSet.of(b)
    assert fa_formula(Neg(Bot())) == AtomSet()


def test_act_renames_binders_too():
    f = All(a, P(Var(a)))
    assert act_formula(swap(a, b), f) == All(b, P(Var(b)))


def test_alpha_eq_examples():
    assert alpha_eq(All(a, P(Var(a))), All(b, P(Var(b))))
    assert not alpha_eq(All(a, P(Var(b))), All(b, P(Var(a))))
    assert not alpha_eq(All(a, P(Var(a))), All(a, P(Var(b))))
    # nested binders, permuted
    f = All(a, All(b, Pred("Q", (Var(a), Var(b)))))
    g = All(b, All(a, Pred("Q", (Var(b), Var(a)))))
    assert alpha_eq(f, g)
    assert not alpha_eq(f, All(b, All(a, Pred("Q", (Var(a), Var(b))))))


@given(formulas())
def test_alpha_eq_reflexive(f):
    assert alpha_eq(f, f)


@given(formulas(), perms())
def test_alpha_eq_under_renaming(f, p):
    assert alpha_eq(f, act_formula(p, f)) == (
        all(p(x) == x for x in fa_formula(f))
    )


def test_subst_term_golden():
    assert subst_term(App("f", (Var(a),)), a, Var(b)) == App("f", (Var(b),))
    assert subst_term(Var(c), a, Var(b)) == Var(c)


def test_subst_shadowed_binder_is_untouched():
    f = All(a, P(Var(a)))
    assert subst_formula(f, a, Var(b)) == f


def test_subst_renames_capturing_binder():
    f = All(b, P(Var(a)))
    out = subst_formula(f, a, Var(b))
    assert out == All(Atom(2), P(Var(b)))  # least index not in {a, b}
    assert alpha_eq(out, All(c, P(Var(b))))


def test_subst_keeps_safe_binder():
    f = All(b, P(Var(a)))
    assert subst_formula(f, a, App("f", (Var(c),))) == All(b, P(App("f", (Var(c),))))


@given(formulas(), atoms, terms(), perms())
def test_subst_equivariant(f, x, s, p):
    lhs = act_formula(p, subst_formula(f, x, s))
    rhs = subst_formula(act_formula(p, f), p(x), act_term(p, s))
    assert alpha_eq(lhs, rhs)


@given(formulas(), atoms, terms())
def test_subst_free_atoms(f, x, s):
    out = fa_formula(subst_formula(f, x, s))
    if x in fa_formula(f):
        assert out == (fa_formula(f) - AtomSet.of(x)) | fa_term(s)
    else:
        assert out == fa_formula(f)


@given(formulas(), atoms)
def test_subst_identity(f, x):
    assert alpha_eq(subst_formula(f, x, Var(x)), f)


def test_signature_validation():
    sig = Signature(funs={"f": 1}, preds={"P": 1})
    assert sig.fun("f", Var(a)) == App("f", (Var(a),))
    with pytest.raises(ArityError):
        sig.fun("f", Var(a), Var(b))
    with pytest.raises(UnknownSymbolError):
        sig.pred_arity("Q")
    with pytest.raises(ArityError):
        Signature(funs={"f": -1})


def test_validate_formula():
    sig = Signature(funs={"f": 1}, preds={"P": 1})
    sig.validate_formula(All(a, P(App("f", (Var(a),)))))
    with pytest.raises(UnknownSymbolError):
        sig.validate_formula(Pred("Q", (Var(a),)))
    with pytest.raises(ArityError):
        sig.validate_formula(Pred("P", (Var(a), Var(b))))


def test_used_signature():
    f = All(a, And(P(App("f", (Var(a),))), Pred("Q", (Var(a), Var(b)))))
    sig = used_signature([f, Bot()])
    assert sig.funs == {"f": 1}
    assert sig.preds == {"P": 1, "Q": 2}
    with pytest.raises(ArityError):
        used_signature([P(Var(a)), Pred("P", (Var(a), Var(b)))])


def test_print_forms():
    f = All(a, And(Neg(P(Var(a))), P(App("c", ()))))
    assert str(f) == "forall a0. ~P(a0) & P(c())"
    assert str(And(And(P(Var(a)), P(Var(b))), P(Var(c)))) == "(P(a0) & P(a1)) & P(a2)"
    assert str(Neg(And(P(Var(a)), P(Var(b))))) == "~(P(a0) & P(a1))"
    assert str(Pred("R", ())) == "R"
    assert str(Bot()) == "bot"
