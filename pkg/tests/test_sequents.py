"""Rule-by-rule checks for derivations, including the freshness side
condition on the quantifier-right rule."""

import pytest

from nomlog import (
    AtomContext,
    AtomSet,
    Derivation,
    DerivationError,
    check_derivation,
    fa_sequent,
    parse_formula,
    parse_sequent,
)
from nomlog.atoms import swap
from nomlog.sequents import act_sequent, check_node, node_violation

# One context for the whole module, so "a" names the same atom in every
# string we parse here.
CTX = AtomContext()
a, b, c = CTX.atom("a"), CTX.atom("b"), CTX.atom("c")


def seq(text):
    return parse_sequent(text, ctx=CTX)


def form(text):
    return parse_formula(text, ctx=CTX)


def test_sequent_alpha_set_equality():
    assert seq("P(a) |- P(b)") == seq("P(a), P(a) |- P(b)")
    assert seq("forall a. P(a) |-") == seq("forall b. P(b) |-")
    assert seq("P(a) |- P(b)") != seq("P(b) |- P(a)")
    assert hash(seq("forall a. P(a) |-")) == hash(seq("forall b. P(b) |-"))


def test_fa_and_act():
    s = seq("P(a) |- forall a. Q(a, b)")
    assert fa_sequent(s) == AtomSet.of(a, b)
    assert act_sequent(swap(a, c), s) == seq("P(c) |- forall a. Q(a, b)")


def ax(text, principal):
    return Derivation("Ax", seq(text), principal=form(principal))


def test_ax_rule():
    assert check_node(ax("P(a) |- P(a)", "P(a)"))
    assert check_node(ax("P(a), P(b) |- bot, P(a)", "P(a)"))
    assert not check_node(ax("P(a) |- P(b)", "P(a)"))
    # without a principal the checker searches for any shared formula
    assert check_node(Derivation("Ax", seq("P(a), P(b) |- P(b)")))
    assert not check_node(Derivation("Ax", seq("P(a) |- P(b)")))


def test_botl_rule():
    assert check_node(Derivation("BotL", seq("bot |- P(a)")))
    assert not check_node(Derivation("BotL", seq("P(a) |- bot")))


def test_andl_rule():
    concl = seq("P(a) & P(b) |- P(a)")
    prem = ax("P(a), P(b) |- P(a)", "P(a)")
    good = Derivation("AndL", concl, (prem,), principal=form("P(a) & P(b)"))
    assert check_node(good)
    # keeping the conjunction in the premise is also fine
    kept = Derivation(
        "AndL",
        concl,
        (ax("P(a) & P(b), P(a), P(b) |- P(a)", "P(a)"),),
        principal=form("P(a) & P(b)"),
    )
    assert check_node(kept)
    missing = Derivation("AndL", concl, (ax("P(a) |- P(a)", "P(a)"),),
                         principal=form("P(a) & P(b)"))
    assert "decompose" in node_violation(missing)
    not_there = Derivation("AndL", seq("P(a) |- P(a)"), (prem,),
                           principal=form("P(a) & P(b)"))
    assert "principal" in node_violation(not_there)


def test_andr_rule():
    concl = seq("P(a), P(b) |- P(a) & P(b)")
    good = Derivation(
        "AndR",
        concl,
        (ax("P(a), P(b) |- P(a)", "P(a)"), ax("P(a), P(b) |- P(b)", "P(b)")),
        principal=form("P(a) & P(b)"),
    )
    assert check_node(good)
    swapped = Derivation(
        "AndR",
        concl,
        (ax("P(a), P(b) |- P(b)", "P(b)"), ax("P(a), P(b) |- P(a)", "P(a)")),
        principal=form("P(a) & P(b)"),
    )
    assert node_violation(swapped) is not None


def test_negl_negr_rules():
    good = Derivation(
        "NegL",
        seq("P(a), ~P(a) |- bot"),
        (ax("P(a) |- P(a), bot", "P(a)"),),
        principal=form("~P(a)"),
    )
    assert check_node(good)
    good_r = Derivation(
        "NegR",
        seq("|- ~bot"),
        (Derivation("BotL", seq("bot |-")),),
        principal=form("~bot"),
    )
    assert check_node(good_r)
    wrong_side = Derivation(
        "NegR",
        seq("|- ~bot"),
        (Derivation("BotL", seq("bot |- bot")),),
        principal=form("~bot"),
    )
    assert node_violation(wrong_side) is not None


def test_alll_rule_witness():
    concl = seq("forall a. P(a) |- P(f(b))")
    good = Derivation(
        "AllL",
        concl,
        (ax("forall a. P(a), P(f(b)) |- P(f(b))", "P(f(b))"),),
        principal=form("forall a. P(a)"),
        witness=form("P(f(b))").args[0],
    )
    assert check_node(good)
    bad_witness = Derivation(
        "AllL",
        concl,
        (ax("forall a. P(a), P(f(b)) |- P(f(b))", "P(f(b))"),),
        principal=form("forall a. P(a)"),
        witness=form("P(c)").args[0],
    )
    assert "instance" in node_violation(bad_witness)


def test_allr_rule_eigen_condition():
    concl = seq("forall a. P(a) |- forall b. P(b)")
    prem = Derivation(
        "AllL",
        seq("forall a. P(a) |- P(c)"),
        (ax("forall a. P(a), P(c) |- P(c)", "P(c)"),),
        principal=form("forall a. P(a)"),
        witness=form("P(c)").args[0],
    )
    good = Derivation("AllR", concl, (prem,), principal=form("forall b. P(b)"), eigen=c)
    assert check_node(good)

    # eigen atom free elsewhere in the conclusion is rejected
    leaky = Derivation(
        "AllR",
        seq("P(c) |- forall b. P(b)"),
        (ax("P(c) |- P(c)", "P(c)"),),
        principal=form("forall b. P(b)"),
        eigen=c,
    )
    assert "eigen" in node_violation(leaky)

    # the premise must exhibit the body at the eigen atom
    hollow = Derivation(
        "AllR",
        concl,
        (ax("forall a. P(a), P(b) |- P(b)", "P(b)"),),
        principal=form("forall b. P(b)"),
        eigen=c,
    )
    assert node_violation(hollow) is not None


def test_rule_arity_and_unknown_rule():
    assert "unknown rule" in node_violation(Derivation("Cut", seq("|-")))
    assert "premise" in node_violation(
        Derivation("AndR", seq("|- P(a) & P(b)"), (), principal=form("P(a) & P(b)"))
    )


def test_check_derivation_reports_path():
    bad_leaf = ax("P(a) |- P(b)", "P(a)")
    outer = Derivation(
        "NegR",
        seq("|- ~P(a), P(b)"),
        (Derivation("NegL", seq("P(a) |- P(b)"), (bad_leaf,), principal=form("~P(a)")),),
        principal=form("~P(a)"),
    )
    with pytest.raises(DerivationError) as e:
        check_derivation(outer)
    assert str(e.value).startswith("premises[0]")


def test_check_derivation_returns_conclusion():
    d = Derivation("BotL", seq("bot |- P(a)"))
    assert check_derivation(d) == seq("bot |- P(a)")
