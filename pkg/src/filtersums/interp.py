"""Evaluation of parsed statements and the printing of values.

Values are evaluated against a ground universe (``universe`` statement,
ℤ with the negating involution by default).  Product-indexed values, matrices
among them, live on its square.  :func:`show` prints any value as DSL
text that evaluates back to an equal value in the same ground universe.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import filters as fl
from . import operators as op
from . import sums as sm
from .coefficients import Quaternion, format_scalar, inv
from .dsl import (
    BinOp, Brace, Call, Check, Cmd, Interval, Kw, Let, ListLit, Mat, Name, Neg, Num, Pair,
    TupleLit, UniverseStmt, parse,
)
from .symsets import INF, NEG_INF, Cell, FiniteU, IntHalfLine, IntLine, ProdSet, ProductU, SymSet


class EvalError(ValueError):
    def __init__(self, msg: str, line: int = 0):
        super().__init__(f"line {line}: {msg}" if line else msg)
        self.line = line


def universe_named(name: str):
    if name == "Z":
        return IntLine("negate")
    if name == "Zid":
        return IntLine("identity")
    if name == "N":
        return IntHalfLine()
    if name.startswith("F") and name[1:].isdigit():
        return FiniteU(int(name[1:]))
    raise EvalError(f"unknown universe {name!r} (use Z, Zid, N or F<n>)")


def universe_label(u) -> str:
    if isinstance(u, IntLine):
        return "Z" if u.involution == "negate" else "Zid"
    if isinstance(u, IntHalfLine):
        return "N"
    return f"F{u.size}"


# --------------------------------------------------------------- printing


def show_filter(F) -> str:
    prod = F.is_product
    if isinstance(F, fl.All):
        return "all2" if prod else "all"
    if isinstance(F, fl.Cof):
        return "cof2" if prod else "cof"
    if isinstance(F, fl.Dcc):
        return "dcc"
    if isinstance(F, fl.Acc):
        return "acc"
    if isinstance(F, fl.Principal):
        return "principal{" + ", ".join(show(b) for b in F.bases) + "}"
    names = {
        fl.Meet: "meet", fl.Join: "join", fl.Quotient: "quot",
        fl.Tensor: "tensor", fl.CofPair: "cofpair", fl.Angle: "angle", fl.TimesProd: "times",
    }
    for cls, name in names.items():
        if isinstance(F, cls):
            a, b = (F.left, F.right) if hasattr(F, "left") else (F.fh, F.fg)
            return f"{name}({show_filter(a)}, {show_filter(b)})"
    if isinstance(F, fl.Perp):
        return f"perp({show_filter(F.inner)})"
    if isinstance(F, fl.Star):
        return f"istar({show_filter(F.inner)})"
    if isinstance(F, fl.Induced):
        return f"induced({show_filter(F.inner)}, {show(F.C)})"
    raise TypeError(f"cannot print {F!r}")


def show(v) -> str:
    if isinstance(v, fl.Filter):
        return show_filter(v)
    if isinstance(v, (SymSet, ProdSet)):
        return v.to_dsl()
    if isinstance(v, sm.FormalSum):
        text = v.to_dsl()
        return f"row({text})" if v.side == "row" else text
    if isinstance(v, op.SymMatrix):
        return v.to_dsl()
    if isinstance(v, (Fraction, int, Quaternion)):
        return format_scalar(v)
    if isinstance(v, fl.Tri):
        return v.value
    if isinstance(v, sm.PatternedFamily):
        return f"family({show(v.index)}, {show(v.coeffs)})"
    if isinstance(v, tuple):
        return "(" + ", ".join(show(x) for x in v) + ")"
    return str(v)


# -------------------------------------------------------------- evaluation


def _scalar(v):
    if isinstance(v, (Fraction, Quaternion)):
        return v
    raise EvalError(f"expected a scalar, got {show(v)}")


def _int(v) -> int:
    if isinstance(v, Fraction) and v.denominator == 1:
        return int(v)
    raise EvalError(f"expected an integer, got {show(v)}")


def _bound(x, low: bool, opened: bool):
    if x is None:
        return NEG_INF if low else INF
    if opened:
        return x + 1 if low else x - 1
    return x


@dataclass
class Env:
    universe: object = field(default_factory=IntLine)
    names: dict = field(default_factory=dict)

    @property
    def square(self) -> ProductU:
        return ProductU(self.universe, self.universe)

    # -- dispatch
    def eval(self, node):
        method = getattr(self, "_" + type(node).__name__.lower(), None)
        if method is None:
            raise EvalError(f"cannot evaluate {type(node).__name__}")
        return method(node)

    def _num(self, node):
        return Fraction(node.value)

    def _interval(self, node):
        u = self.universe
        return SymSet.interval(u, _bound(node.lo, True, node.lo_open), _bound(node.hi, False, node.hi_open))

    def _neg(self, node):
        v = self.eval(node.arg)
        return -v

    def _binop(self, node):
        a, b = self.eval(node.left), self.eval(node.right)
        if node.op == "+":
            return a + b
        if node.op == "-":
            return a - b
        if node.op == "*":
            return op.product(a, b)
        return _scalar(a) * inv(_scalar(b))

    def _tuplelit(self, node):
        return tuple(self.eval(x) for x in node.items)

    def _listlit(self, node):
        return [self.eval(x) for x in node.items]

    def _name(self, node):
        n = node.id
        if n in self.names:
            return self.names[n]
        u = self.universe
        consts = {
            "all": lambda: fl.all_(u), "cof": lambda: fl.cof(u),
            "dcc": lambda: fl.dcc(u), "acc": lambda: fl.acc(u),
            "all2": lambda: fl.All(self.square), "cof2": lambda: fl.Cof(self.square),
            "empty": lambda: SymSet.empty(u), "full": lambda: SymSet.full(u),
            "empty2": lambda: ProdSet.empty(self.square), "full2": lambda: ProdSet.full(self.square),
            "E": lambda: op.identity(u),
        }
        if n in consts:
            return consts[n]()
        raise EvalError(f"unknown name {n!r}")

    def _mat(self, node):
        body = node.body
        H = G = self.universe
        if isinstance(body, Brace) and body.kind == "explicit":
            ents = {}
            for item in body.items:
                if not isinstance(item, Pair):
                    raise EvalError("explicit entries are (h, g):k")
                h, g = self.eval(item.key)
                ents[(_int(h), _int(g))] = _scalar(self.eval(item.value))
            return op.explicit(H, G, ents)
        if isinstance(body, Brace) and body.kind == "finitary":
            terms = [self.eval(t) for t in body.items]
            if not terms:
                return op.zero_matrix(H, G)
            return op.finitary(terms)
        if isinstance(body, Call) and body.fn == "conv":
            args = [a for a in body.args if not isinstance(a, Kw)]
            kws = {a.name: a.value for a in body.args if isinstance(a, Kw)}
            key = kws.get("key", Name("s"))
            if len(args) != 1 or not isinstance(key, Name):
                raise EvalError("conv(kernel, key=s|d)")
            # kernels live on the group ℤ whatever the index universe is
            saved, self.universe = self.universe, op.Z0
            try:
                kernel = op.on_z(self.eval(args[0]))
            finally:
                self.universe = saved
            return op.conv(H, G, kernel, key.id)
        if isinstance(body, Brace) and body.kind == "sum":
            out = op.zero_matrix(H, G)
            for part in body.items:
                out = op.mat_add(out, self._mat(Mat(part)))
            return out
        if isinstance(body, Name) and body.id == "identity":
            return op.identity(H)
        raise EvalError("mat expects explicit{...}, finitary{...}, conv(...), sum{...} or identity")

    def _brace(self, node):
        u = self.universe
        if node.kind == "fsum":
            ents = {}
            for item in node.items:
                if not isinstance(item, Pair):
                    raise EvalError("fsum entries are point:scalar")
                ents[_int(self.eval(item.key))] = _scalar(self.eval(item.value))
            return sm.fsum(u, ents)
        if node.kind == "principal":
            return fl.principal(u, *[self.eval(x) for x in node.items])
        if node.kind == "cell":
            bounds = [NEG_INF, INF] * 4
            for item in node.items:
                idx = {"h": 0, "g": 2, "s": 4, "d": 6}.get(getattr(item.key, "id", None))
                if idx is None or not isinstance(item, Pair) or not isinstance(item.value, Interval):
                    raise EvalError("cell entries are h|g|s|d:interval")
                iv = item.value
                bounds[idx] = _bound(iv.lo, True, iv.lo_open)
                bounds[idx + 1] = _bound(iv.hi, False, iv.hi_open)
            return ProdSet.make(self.square, [Cell(*bounds)])
        if node.kind is None:
            return [self.eval(x) for x in node.items]
        raise EvalError(f"{node.kind}{{...}} only appears after mat")

    def _call(self, node):
        fn = node.fn
        kws = {a.name: a.value for a in node.args if isinstance(a, Kw)}
        if fn == "pat":
            pos = [a for a in node.args if not isinstance(a, Kw)]
            if len(pos) != 2 or "period" not in kws:
                raise EvalError("pat(set, period=p, [c0, ..., c(p-1)])")
            coeffs = [_scalar(c) for c in self.eval(pos[1])]
            return sm.pattern(self.universe, self.eval(pos[0]), _int(self.eval(kws["period"])), coeffs)
        if fn == "stripe":
            if len(node.args) != 2 or not isinstance(node.args[0], Name) or node.args[0].id not in "sd":
                raise EvalError("stripe(s|d, S)")
            return ProdSet.stripe(self.square, node.args[0].id, self.eval(node.args[1]))
        args = [self.eval(a) for a in node.args]
        table = self._functions()
        if fn not in table:
            raise EvalError(f"unknown function {fn!r}")
        return table[fn](*args)

    def _functions(self) -> dict:
        u = self.universe

        def star(x):
            return fl.star(x) if isinstance(x, fl.Filter) else x.star()

        def fold(f):
            def go(first, *rest):
                out = first
                for x in rest:
                    out = f(out, x)
                return out
            return go

        return {
            "union": fold(lambda a, b: a.union(b)),
            "inter": fold(lambda a, b: a.inter(b)),
            "diff": lambda a, b: a.diff(b),
            "compl": lambda a: a.compl(),
            "star": star,
            "rect": ProdSet.rect,
            "pts": lambda *xs: SymSet.points_of(u, [_int(x) for x in xs]),
            "projh": lambda X: X.project_h(),
            "projg": lambda X: X.project_g(),
            "meet": fl.meet,
            "join": fl.join,
            "quot": fl.quotient,
            "perp": fl.perp,
            "istar": fl.star,
            "induced": fl.induced,
            "tensor": fl.tensor,
            "cofpair": fl.cof_pair,
            "angle": fl.angle_pair,
            "times": fl.times_prod,
            "charfn": sm.char_fn,
            "delta": lambda x, k=Fraction(1): sm.delta(u, _int(x), _scalar(k)),
            "row": lambda f: f.as_row(),
            "col": lambda f: f.as_column(),
            "shift": lambda f, k: op.to_universe(op.on_z(f).shift(_int(k)), u),
            "reflect": lambda f: f.reflect(),
            "truncate": lambda f, S: f.truncate(S),
            "restrict": lambda f, S: f.restrict(S),
            "support": lambda f: f.support(),
            "family": sm.PatternedFamily,
            "q": lambda *xs: Quaternion(*[_scalar(x) for x in xs]),
            "outer": op.outer,
            "translation": lambda s, k=Fraction(1): op.translation_op(_int(s), _scalar(k)),
        }

    def _cmd(self, node):
        a = [self.eval(x) for x in node.args]
        n = node.name
        if n == "member":
            return fl.member(a[0], a[1])
        if n == "pair":
            return sm.pairing(a[0], a[1])
        if n == "inspace":
            return sm.in_space(a[0], a[1])
        if n == "gsum":
            return sm.g_sum(a[0], a[1])
        if n == "nbhd":
            return sm.in_neighborhood(a[0], a[1], a[2])
        if n == "apply":
            return op.mat_vec(a[0], a[1])
        if n == "vecmat":
            return op.vec_mat(a[0], a[1])
        if n == "mul":
            return op.mat_mul(a[0], a[1])
        if n == "ringmul":
            return op.ring_mul(a[0], a[1], a[2])
        if n == "ringadd":
            return op.ring_add(a[0], a[1], a[2])
        if n == "contl":
            return op.is_continuous_left(*a)
        if n == "contr":
            return op.is_continuous_right(*a)
        if n == "m1":
            return op.check_m1(*a)
        if n == "m2":
            return op.check_m2(*a)
        if n == "balanced":
            return fl.is_balanced(a[0])
        if n == "proper":
            return fl.is_proper(a[0])
        if n == "selfadjoint":
            return fl.is_self_adjoint(a[0])
        if n == "leq":
            return fl.filter_leq(a[0], a[1])
        if n == "eq":
            return fl.filter_eq(a[0], a[1])
        if n == "finite":
            return fl.tri(a[0].is_finite())
        if n == "cofinite":
            return fl.tri(a[0].is_cofinite())
        if n == "zeroset":
            return a[0].zero_set()
        if n == "alt":
            return op.alternating_product(list(a[0]))
        raise EvalError(f"unknown command {n!r}")


# ------------------------------------------------------------------ queries


def evaluate(text: str, env: Env | None = None):
    """Evaluate one expression in ``env`` (a fresh ℤ environment by default)."""
    from .dsl import parse_expr

    return (env or Env()).eval(parse_expr(text))


def result_of(query: str, value, elapsed_ms: int) -> dict:
    out = {"query": query}
    if isinstance(value, fl.Tri):
        out["verdict"] = value.value
        if value.reason:
            out["reason"] = value.reason
        if value.witness is not None:
            out["witness"] = show(value.witness)
    else:
        out["verdict"] = "value"
        out["value"] = show(value)
    out["elapsedMs"] = elapsed_ms
    return out


_DOMAIN_ERRORS = (
    EvalError, ValueError, TypeError, ArithmeticError, ZeroDivisionError,
)


def run_program(text: str, env: Env | None = None) -> list:
    """Run a program; one result per ``check`` or bare expression line.

    Errors in a line are reported as an ``error`` verdict and do not stop the
    remaining lines.  Syntax errors are raised before anything runs.
    """
    env = env or Env()
    results = []
    for st in parse(text):
        node = st.node
        t0 = time.perf_counter()
        try:
            if isinstance(node, UniverseStmt):
                env.universe = universe_named(node.name)
                continue
            if isinstance(node, Let):
                env.names[node.name] = env.eval(node.expr)
                continue
            expr = node.expr if isinstance(node, Check) else node
            value = env.eval(expr)
            results.append(result_of(st.text, value, int((time.perf_counter() - t0) * 1000)))
        except _DOMAIN_ERRORS as e:
            results.append({
                "query": st.text,
                "verdict": "error",
                "error": f"line {st.line}: {type(e).__name__}: {e.args[0] if e.args else e}",
                "elapsedMs": int((time.perf_counter() - t0) * 1000),
            })
    return results
