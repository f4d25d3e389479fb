import pytest
from hypothesis import given

from nomlog import (
    All,
    And,
    App,
    Atom,
    AtomContext,
    Neg,
    ParseError,
    Pred,
    Signature,
    Var,
    parse_formula,
    parse_sequent,
    parse_signature,
    parse_term,
)
from nomlog.parsing import print_signature

from .strategies import formulas, terms

a, b, c = Atom(0), Atom(1), Atom(2)


def test_atom_context_indices():
    ctx = AtomContext()
    assert ctx.atom("x") == Atom(0)
    assert ctx.atom("y") == Atom(1)
    assert ctx.atom("x") == Atom(0)  # stable
    assert ctx.atom("a7") == Atom(7)  # aN spells the index directly
    assert ctx.atom("z") == Atom(2)
    assert str(ctx.atom("x")) == "x"  # display preserved


def test_parse_term_shapes():
    assert parse_term("g(f(a), b)") == App("g", (App("f", (Var(a),)), Var(b)))
    assert parse_term("c()") == App("c", ())


def test_precedence_and_scope():
    f = parse_formula("~P(a) & Q(a, b)")
    assert f == And(Neg(Pred("P", (Var(a),))), Pred("Q", (Var(a), Var(b))))
    g = parse_formula("P(a) & P(b) & P(c)")
    assert isinstance(g, And) and isinstance(g.right, And)  # right-assoc
    h = parse_formula("forall a. P(a) & P(b)")
    assert isinstance(h, All) and isinstance(h.body, And)  # scope extends right
    assert parse_formula("(forall a. P(a)) & P(b)") == And(
        All(a, Pred("P", (Var(a),))), Pred("P", (Var(b),))
    )


def test_parse_zero_arity_pred():
    assert parse_formula("R & ~R") == And(Pred("R", ()), Neg(Pred("R", ())))


@given(formulas())
def test_print_parse_round_trip(f):
    assert parse_formula(str(f)) == f


@given(terms())
def test_term_round_trip(t):
    assert parse_term(str(t)) == t


def test_parse_error_offsets():
    with pytest.raises(ParseError) as e:
        parse_formula("P(a) &")
    assert "byte 6" in str(e.value)
    with pytest.raises(ParseError) as e:
        parse_formula("P(a")
    assert "byte" in str(e.value)
    with pytest.raises(ParseError):
        parse_formula("")
    with pytest.raises(ParseError):
        parse_formula("P(a) P(b)")  # trailing input


def test_strict_mode_checks_signature():
    sig = Signature(funs={"f": 1}, preds={"P": 1})
    assert parse_formula("P(f(a))", sig) == Pred("P", (App("f", (Var(a),)),))
    with pytest.raises(ParseError):
        parse_formula("Q(a)", sig)
    with pytest.raises(ParseError):
        parse_formula("P(a, b)", sig)
    with pytest.raises(ParseError):
        parse_formula("P(P(a))", sig)  # predicate used as term former


def test_infer_mode_requires_consistency():
    with pytest.raises(ParseError):
        parse_formula("P(a) & P(a, b)")


def test_infer_mode_accumulates_into_given_signature():
    sig = Signature()
    parse_formula("P(f(a))", sig, infer=True)
    assert sig.preds == {"P": 1} and sig.funs == {"f": 1}


def test_sequent_parse_and_dedup():
    s = parse_sequent("P(a), P(a) |- P(b)")
    assert len(s.left) == 1
    s2 = parse_sequent("forall a. P(a), forall b. P(b) |-")
    assert len(s2.left) == 1  # alpha-duplicates collapse


def test_parse_signature_round_trip():
    text = """
    # arities
    fun f/1
    fun c/0
    pred P/1
    pred Q/2
    """
    sig = parse_signature(text)
    assert sig.funs == {"f": 1, "c": 0}
    assert sig.preds == {"P": 1, "Q": 2}
    assert parse_signature(print_signature(sig)) == sig


def test_parse_signature_rejects_garbage():
    with pytest.raises(ParseError):
        parse_signature("fun f")
    with pytest.raises(ParseError):
        parse_signature("pred P/one")
