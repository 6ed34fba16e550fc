import pytest
from hypothesis import given

from conftest import formulas
from srlkit.syntax import (BOT, TOP, And, Imp, Not, Or, ParseError, Var, box_formula, depth,
                           match_scheme, parse, size, subformulas, substitute, to_str, variables)

p, q, r = Var("p"), Var("q"), Var("r")


def test_associativity_and_precedence():
    a, b, c = Var("a"), Var("b"), Var("c")
    assert parse("a -> b -> c") == Imp(a, Imp(b, c))
    assert parse("~a \\/ b /\\ c") == Or(Not(a), And(b, c))
    assert parse("a /\\ b /\\ c") == And(And(a, b), c)
    assert parse("a \\/ b \\/ c") == Or(Or(a, b), c)
    assert parse("(a /\\ (a -> b)) -> b") == Imp(And(a, Imp(a, b)), b)
    assert parse("~~a") == Not(Not(a))


def test_unicode_aliases():
    assert parse("α ∧ (α → β) → β") == parse("alpha /\\ (alpha -> beta) -> beta")
    assert parse("¬p ∨ ⊤") == Or(Not(p), TOP)
    assert parse("⊥") == BOT
    assert parse("□p") == box_formula(p)


def test_constants():
    assert parse("top") == Imp(Var("_t"), Var("_t"))
    assert parse("bot") == Not(TOP)
    assert to_str(TOP) == "top" and to_str(BOT) == "bot"
    assert parse("box p") == Imp(Imp(p, p), p)


@pytest.mark.parametrize("text,pos", [("p ->", 4), ("(p", 2), ("p q", 2), ("p $ q", 2), ("", 0)])
def test_parse_errors_carry_position(text, pos):
    with pytest.raises(ParseError) as e:
        parse(text)
    assert e.value.pos == pos


def test_printer_minimal_parentheses():
    assert to_str(Imp(Imp(p, q), r)) == "(p -> q) -> r"
    assert to_str(Imp(p, Imp(q, r))) == "p -> q -> r"
    assert to_str(And(p, And(q, r))) == "p /\\ (q /\\ r)"
    assert to_str(And(And(p, q), r)) == "p /\\ q /\\ r"
    assert to_str(Not(And(p, q))) == "~(p /\\ q)"
    assert to_str(Or(And(p, q), r)) == "p /\\ q \\/ r"
    assert to_str(Imp(And(p, Imp(p, q)), q), unicode=True) == "p ∧ (p → q) → q"


def test_box_round_trip():
    f = box_formula(box_formula(p))
    assert parse(to_str(f)) == f


def test_subformulas_and_measures():
    assert subformulas(parse("p -> q")) == {p, q, Imp(p, q)}
    assert subformulas(p) == {p}
    f = parse("(p -> q) /\\ (p -> q)")
    assert len(subformulas(f)) <= size(f)
    assert variables(parse("q -> p -> q")) == ["q", "p"]
    assert depth(p) == 0 and depth(parse("~(p -> q)")) == 2


def test_match_scheme_examples():
    a = Var("alpha")
    assert match_scheme(Imp(a, a), parse("p -> p")) == {"alpha": p}
    assert match_scheme(Imp(a, a), parse("p -> q")) is None
    ax2 = parse("(alpha -> beta) -> (beta -> delta) -> alpha -> delta")
    assert match_scheme(ax2, parse("(p->q)->((q->r)->(p->r))")) == {"alpha": p, "beta": q, "delta": r}
    # the reserved variable only matches itself
    assert match_scheme(TOP, parse("p -> p")) is None
    assert match_scheme(Imp(a, a), TOP) == {"alpha": Var("_t")}


@given(formulas())
def test_round_trip(f):
    assert parse(to_str(f)) == f
    assert parse(to_str(f, unicode=True)) == f


@given(formulas(), formulas(max_leaves=4), formulas(max_leaves=4))
def test_matcher_soundness(s, g, h):
    f = substitute({"p": g, "q": h}, s)
    sigma = match_scheme(s, f)
    assert sigma is not None
    assert substitute(sigma, s) == f


@given(formulas(), formulas())
def test_match_result_is_exact(s, f):
    sigma = match_scheme(s, f)
    if sigma is not None:
        assert substitute(sigma, s) == f


@given(formulas())
def test_subformula_bound(f):
    assert len(subformulas(f)) <= size(f)
    assert f in subformulas(f)
