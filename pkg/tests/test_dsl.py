import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from filtersums import sampling as sp
from filtersums.dsl import COMMANDS, Cmd, DslSyntaxError, Let, Name, parse, parse_expr, parse_line, unparse
from filtersums.interp import show
from filtersums.symsets import IntLine, ProductU

PROGRAM = """\
# comment lines are skipped
let F = perp(dcc)
member F [5..inf)
member dcc (-inf..0]
let L = mat conv(fsum{0:1, 1:-1}, key=s)
apply L charfn([0..inf))
ringmul L (mat conv(charfn([0..inf)), key=s)) dcc
pair row(fsum{0:1,1:1}) fsum{0:1,-1:-1}
1/2 + 1/3 * -2
universe N
"""

EXPRS = [
    "perp(dcc)",
    "union([0..3],[5..inf))",
    "(-inf..-2]",
    "fsum{0:1,1:-1}",
    "pat([0..inf), period=2, [1,0])",
    "mat conv(fsum{0:1}, key=d)",
    "mat finitary{(fsum{0:1}, row(fsum{2:3}))}",
    "mat explicit{(0,1):2, (3,3):-1/2}",
    "q(1,0,1/2,-2) * q(0,1,0,0)",
    "a - b - c",
    "a - (b - c)",
    "-(a + b)",
    "tensor(cof, angle(dcc, acc))",
]


def test_program_parses():
    stmts = parse(PROGRAM)
    assert len(stmts) == 9
    assert isinstance(stmts[0].node, Let) and stmts[0].line == 2
    assert isinstance(stmts[1].node, Cmd) and stmts[1].node.name == "member"
    assert stmts[-1].text == "universe N"


def test_member_query_shape():
    node = parse_line("member dcc (-inf..0]")
    assert node == Cmd("member", (Name("dcc"), node.args[1]))
    assert node.args[1].lo_open and not node.args[1].hi_open


def test_spacing_separates_calls_from_arguments():
    node = parse_line("apply L (mat identity)")
    assert isinstance(node, Cmd) and node.args[0] == Name("L")


@pytest.mark.parametrize("src", EXPRS)
def test_unparse_round_trip(src):
    ast = parse_expr(src)
    assert parse_expr(unparse(ast)) == ast


@pytest.mark.parametrize("src", [line for line in PROGRAM.splitlines() if line and not line.startswith("#")])
def test_statement_round_trip(src):
    ast = parse_line(src)
    assert parse_line(unparse(ast)) == ast


def test_missing_argument_reports_column():
    with pytest.raises(DslSyntaxError) as e:
        parse_line("member dcc")
    assert e.value.col == 11 and e.value.line == 1
    assert str(e.value).startswith("line 1, column 11:")


@pytest.mark.parametrize("src", ["member dcc [0..", "let = 3", "fsum{0:1", "perp(dcc", "member ) dcc", "3 $ 4"])
def test_malformed_input(src):
    with pytest.raises(DslSyntaxError):
        parse_line(src)


def test_errors_carry_program_line():
    with pytest.raises(DslSyntaxError) as e:
        parse("member dcc [0..1]\n\nperp(dcc")
    assert e.value.line == 3


def test_every_command_has_an_arity():
    assert COMMANDS["member"] == 2 and COMMANDS["nbhd"] == 3 and COMMANDS["alt"] == 1


ints = st.integers(-20, 20)
leaf = st.one_of(ints.map(str), st.sampled_from(["dcc", "acc", "cof", "all", "x"]),
                 st.tuples(ints, ints).map(lambda p: f"[{min(p)}..{max(p)}]"))
exprs = st.recursive(
    leaf,
    lambda e: st.one_of(
        st.tuples(e, st.sampled_from("+-*"), e).map(lambda t: f"({t[0]} {t[1]} {t[2]})"),
        e.map(lambda x: f"perp({x})"),
        st.tuples(e, e).map(lambda t: f"meet({t[0]}, {t[1]})"),
    ),
    max_leaves=8,
)


@settings(max_examples=200)
@given(exprs)
def test_generated_round_trip(src):
    ast = parse_expr(src)
    assert parse_expr(unparse(ast)) == ast


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**32))
def test_suite_generated_round_trip(seed):
    r = random.Random(seed)
    Z = IntLine()
    for v in (sp.filter_ast(r, Z, 3), sp.symset(r, Z), sp.formal_sum(r, Z), sp.prodset(r, ProductU(Z, Z)),
              sp.matrix(r, Z, Z, 3)):
        ast = parse_expr(show(v))
        assert parse_expr(unparse(ast)) == ast
