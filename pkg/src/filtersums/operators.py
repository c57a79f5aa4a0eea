"""Symbolic ``H × G`` matrices and the involution-twisted product.

The product of an ``J × H`` matrix with an ``H × G`` matrix is
``Theta(j, g) = sum_h Phi(j, h*) Psi(h, g)``; a column is an ``H × 1`` matrix
and a row a ``1 × G`` one, so ``(Phi a)(h) = sum_t Phi(h, t*) a(t)``.

Four bodies are supported: :class:`Explicit` (finitely many nonzero
entries), :class:`Finitary` (finite sums of column-times-row terms),
:class:`Conv` (entries ``k(h + g)`` or ``k(g - h)`` for a kernel ``k`` on ℤ)
and :class:`MSum` (formal sums of the others).  Every body has an exact
entry function; zero sets are computed as :class:`ProdSet` whenever the
result stays in the cell fragment.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable

from . import filters as fl
from .coefficients import as_scalar, format_scalar, inv
from .symsets import INF, NEG_INF, Cell, FiniteU, IntHalfLine, IntLine, ProdSet, ProductU, SymSet
from .sums import (
    FormalSum,
    UndefinedPairing,
    UnrepresentableResult,
    _range,
    _span,
    convolve,
    delta,
    pairing,
)

Z0 = IntLine()


class UndefinedProduct(ValueError):
    def __init__(self, msg, witness=None):
        super().__init__(msg)
        self.witness = witness


class NonBalanced(ValueError):
    pass


class NotContinuous(ValueError):
    pass


def on_z(f: FormalSum) -> FormalSum:
    """Reinterpret a sum over ℤ or ℕ as a sum over the kernel group ℤ."""
    if f.universe == Z0:
        return f
    if isinstance(f.universe, FiniteU):
        raise UnrepresentableResult("convolution needs an integer universe")
    return FormalSum.build(Z0, dict(f.finite), f.low, f.high, f.side)


def to_universe(f: FormalSum, u, side=None) -> FormalSum:
    side = side or f.side
    if f.universe == u:
        return f.with_side(side)
    part = f.restrict(SymSet.interval(f.universe, u.lo, u.hi))
    return FormalSum.build(u, dict(part.finite), part.low, part.high, side)


def _key_sign(key: str) -> int:
    return 1 if key == "s" else -1


def _sign(u) -> int:
    return -1 if getattr(u, "involution", "identity") == "negate" else 1


# ------------------------------------------------------------------ bodies


class SymMatrix:
    H: object
    G: object

    @property
    def universe(self) -> ProductU:
        return ProductU(self.H, self.G)

    def entry(self, h: int, g: int):
        raise NotImplementedError

    def row(self, h: int) -> FormalSum:
        raise NotImplementedError

    def col(self, g: int) -> FormalSum:
        raise NotImplementedError

    def zero_set(self) -> ProdSet:
        raise NotImplementedError

    def support(self) -> ProdSet:
        return self.zero_set().compl()

    def max_const(self) -> int:
        return self.zero_set().max_const()

    def __add__(self, other: SymMatrix) -> SymMatrix:
        return mat_add(self, other)

    def __neg__(self):
        return self.scale_left(-1)

    def __sub__(self, other):
        return mat_add(self, -other)

    def __matmul__(self, other):
        if isinstance(other, SymMatrix):
            return mat_mul(self, other)
        return mat_vec(self, other)


@dataclass(frozen=True)
class Explicit(SymMatrix):
    H: object
    G: object
    entries: tuple = ()

    @classmethod
    def make(cls, H, G, entries: dict) -> Explicit:
        clean = {}
        for (h, g), k in entries.items():
            k = as_scalar(k)
            if not (H.lo <= h <= H.hi and G.lo <= g <= G.hi):
                raise ValueError(f"entry ({h},{g}) outside {H.name}x{G.name}")
            if k != 0:
                clean[(int(h), int(g))] = k
        return cls(H, G, tuple(sorted(clean.items())))

    def entry(self, h, g):
        for (a, b), k in self.entries:
            if a == h and b == g:
                return k
        return Fraction(0)

    def row(self, h):
        return FormalSum.build(self.G, {g: k for (a, g), k in self.entries if a == h}, side="row")

    def col(self, g):
        return FormalSum.build(self.H, {h: k for (h, b), k in self.entries if b == g}, side="column")

    def zero_set(self):
        return ProdSet.points_of(self.universe, [p for p, _ in self.entries]).compl()

    def scale_left(self, k):
        k = as_scalar(k)
        return Explicit.make(self.H, self.G, {p: k * v for p, v in self.entries})

    def scale_right(self, k):
        k = as_scalar(k)
        return Explicit.make(self.H, self.G, {p: v * k for p, v in self.entries})

    def to_finitary(self) -> Finitary:
        by_h: dict = {}
        for (h, g), k in self.entries:
            by_h.setdefault(h, {})[g] = k
        terms = tuple(
            (delta(self.H, h, side="column"), FormalSum.build(self.G, row, side="row")) for h, row in sorted(by_h.items())
        )
        return Finitary(self.H, self.G, terms)

    def to_dsl(self):
        return "mat explicit{" + ", ".join(f"({h},{g}):{format_scalar(k)}" for (h, g), k in self.entries) + "}"


@dataclass(frozen=True)
class Finitary(SymMatrix):
    """``sum_i col_i * row_i``; entry ``(h, g)`` is ``sum_i col_i(h) row_i(g)``."""

    H: object
    G: object
    terms: tuple = ()

    def __post_init__(self):
        for c, r in self.terms:
            if c.universe != self.H or r.universe != self.G:
                raise ValueError("finitary term over the wrong universes")

    def entry(self, h, g):
        total = Fraction(0)
        for c, r in self.terms:
            total = total + c.at(h) * r.at(g)
        return total

    def row(self, h):
        out = FormalSum(self.G, side="row")
        for c, r in self.terms:
            out = out + r.scale_left(c.at(h))
        return out.as_row()

    def col(self, g):
        out = FormalSum(self.H, side="column")
        for c, r in self.terms:
            out = out + c.scale_right(r.at(g))
        return out.as_column()

    def is_finite(self) -> bool:
        return all(c.is_finite() and r.is_finite() for c, r in self.terms)

    def to_explicit(self) -> Explicit:
        if not self.is_finite():
            raise UnrepresentableResult("finitary matrix has infinite support")
        ents: dict = {}
        for c, r in self.terms:
            for h, a in c.finite:
                for g, b in r.finite:
                    ents[(h, g)] = ents.get((h, g), 0) + a * b
        return Explicit.make(self.H, self.G, ents)

    def scale_left(self, k):
        return Finitary(self.H, self.G, tuple((c.scale_left(k), r) for c, r in self.terms))

    def scale_right(self, k):
        return Finitary(self.H, self.G, tuple((c, r.scale_right(k)) for c, r in self.terms))

    def zero_set(self):
        if self.is_finite():
            return self.to_explicit().zero_set()
        return _finitary_zero_set(self)

    def to_dsl(self):
        return "mat finitary{" + ", ".join(f"({c.to_dsl()}, {r.to_dsl()})" for c, r in self.terms) + "}"


@dataclass(frozen=True)
class Conv(SymMatrix):
    """Entry ``(h, g)`` is ``kernel(h + g)`` for key ``s`` and ``kernel(g - h)`` for key ``d``."""

    H: object
    G: object
    kernel: FormalSum
    key: str = "s"

    def __post_init__(self):
        if self.key not in ("s", "d"):
            raise ValueError("key must be 's' or 'd'")
        for u in (self.H, self.G):
            if not isinstance(u, (IntLine, IntHalfLine)):
                raise ValueError("convolution matrices live on integer universes")
        if self.kernel.universe != Z0:
            object.__setattr__(self, "kernel", on_z(self.kernel))

    @property
    def alpha(self) -> int:
        return _key_sign(self.key)

    def entry(self, h, g):
        return self.kernel.at(self.alpha * h + g)

    def row(self, h):
        return to_universe(self.kernel.shift(-self.alpha * h), self.G, "row")

    def col(self, g):
        k = self.kernel
        f = k.shift(-g) if self.alpha == 1 else k.reflect().shift(g)
        return to_universe(f, self.H, "column")

    def zero_set(self):
        return ProdSet.stripe(self.universe, self.key, self.kernel.zero_set())

    def scale_left(self, k):
        return Conv(self.H, self.G, self.kernel.scale_left(k), self.key)

    def scale_right(self, k):
        return Conv(self.H, self.G, self.kernel.scale_right(k), self.key)

    def to_dsl(self):
        return f"mat conv({self.kernel.to_dsl()}, key={self.key})"


@dataclass(frozen=True)
class MSum(SymMatrix):
    H: object
    G: object
    parts: tuple = ()

    def entry(self, h, g):
        total = Fraction(0)
        for p in self.parts:
            total = total + p.entry(h, g)
        return total

    def row(self, h):
        out = FormalSum(self.G, side="row")
        for p in self.parts:
            out = out + p.row(h)
        return out.as_row()

    def col(self, g):
        out = FormalSum(self.H, side="column")
        for p in self.parts:
            out = out + p.col(g)
        return out.as_column()

    def scale_left(self, k):
        return MSum(self.H, self.G, tuple(p.scale_left(k) for p in self.parts))

    def scale_right(self, k):
        return MSum(self.H, self.G, tuple(p.scale_right(k) for p in self.parts))

    def zero_set(self):
        return _msum_zero_set(self)

    def to_dsl(self):
        return "mat sum{" + ", ".join(p.to_dsl()[4:] for p in self.parts) + "}"


# ------------------------------------------------------------ constructors


def explicit(H, G, entries: dict) -> Explicit:
    return Explicit.make(H, G, entries)


def finitary(terms: Iterable) -> Finitary:
    terms = tuple((c.as_column(), r.as_row()) for c, r in terms)
    if not terms:
        raise ValueError("finitary matrix needs at least one term; use explicit() for zero")
    return Finitary(terms[0][0].universe, terms[0][1].universe, terms)


def conv(H, G, kernel: FormalSum, key: str = "s") -> Conv:
    return Conv(H, G, on_z(kernel), key)


def identity(G) -> SymMatrix:
    """The twisted unit ``E`` with ``E(g*, g) = 1``."""
    if isinstance(G, FiniteU):
        return Explicit.make(G, G, {(G.star(g), g): 1 for g in range(G.size)})
    key = "s" if G.involution == "negate" else "d"
    return Conv(G, G, delta(Z0, 0), key)


def translation_op(s: int, k=1) -> Conv:
    """Left multiplication by ``k t^s`` on Laurent columns over ℤ."""
    return Conv(Z0, Z0, delta(Z0, s, k), "s")


def zero_matrix(H, G) -> Explicit:
    return Explicit(H, G, ())


# --------------------------------------------------------------- zero sets


def _ray_regions(sums) -> list:
    """Split a universe into the finite span of ``sums`` and the rays on
    which every sum follows its pattern."""
    u = sums[0].universe
    lo, hi = _span(sums)
    regions = []
    if any(f.low for f in sums):
        regions.append(("low", SymSet.interval(u, NEG_INF, lo - 1)))
    if any(f.high for f in sums):
        regions.append(("high", SymSet.interval(u, hi + 1, INF)))
    return lo, hi, regions


def _period(sums, which) -> int:
    p = 1
    for f in sums:
        ray = getattr(f, which)
        if ray:
            p = p * ray[1].period // gcd(p, ray[1].period)
    return p


def _finitary_zero_set(M: Finitary) -> ProdSet:
    U = M.universe
    cols = [c for c, _ in M.terms]
    rows = [r for _, r in M.terms]
    hlo, hhi, hregs = _ray_regions(cols)
    glo, ghi, gregs = _ray_regions(rows)
    cells = []
    for h in _range(M.H, hlo, hhi):
        for a, b in M.row(h).support().ivs:
            cells.append(Cell(h, h, a, b))
    for _, R in hregs:
        for g in _range(M.G, glo, ghi):
            for a, b in M.col(g).support().inter(R).ivs:
                cells.append(Cell(a, b, g, g))
    for hw, R in hregs:
        ph = _period(cols, hw)
        hs = [R.max() - i for i in range(ph)] if hw == "low" else [R.min() + i for i in range(ph)]
        for gw, Q in gregs:
            pg = _period(rows, gw)
            gs = [Q.max() - i for i in range(pg)] if gw == "low" else [Q.min() + i for i in range(pg)]
            vals = [M.entry(h, g) != 0 for h in hs for g in gs]
            if all(vals):
                cells.append(Cell(R.ivs[0][0], R.ivs[0][1], Q.ivs[0][0], Q.ivs[0][1]))
            elif any(vals):
                raise UnrepresentableResult("finitary block with a periodic zero pattern")
    return ProdSet.make(U, cells).compl()


def _normalize_parts(M: SymMatrix) -> list:
    parts = []
    stack = [M]
    while stack:
        p = stack.pop()
        if isinstance(p, MSum):
            stack.extend(p.parts)
        elif isinstance(p, Finitary) and p.is_finite():
            parts.append(p.to_explicit())
        else:
            parts.append(p)
    explicit_parts = [p for p in parts if isinstance(p, Explicit)]
    rest = [p for p in parts if not isinstance(p, Explicit)]
    merged = []
    for p in rest:
        for i, q in enumerate(merged):
            if isinstance(p, Conv) and isinstance(q, Conv) and p.key == q.key:
                merged[i] = Conv(q.H, q.G, q.kernel + p.kernel, q.key)
                break
            if isinstance(p, Finitary) and isinstance(q, Finitary):
                merged[i] = Finitary(q.H, q.G, q.terms + p.terms)
                break
        else:
            merged.append(p)
    if explicit_parts:
        ents: dict = {}
        for e in explicit_parts:
            for pt, k in e.entries:
                ents[pt] = ents.get(pt, 0) + k
        merged.append(Explicit.make(M.H, M.G, ents))
    return merged


def _msum_zero_set(M: MSum) -> ProdSet:
    parts = _normalize_parts(M)
    if not parts:
        return ProdSet.full(M.universe)
    explicit_parts = [p for p in parts if isinstance(p, Explicit)]
    rest = [p for p in parts if not isinstance(p, Explicit)]
    if len(rest) > 1:
        raise UnrepresentableResult("zero set of a sum of infinite matrix bodies")
    if not rest:
        return explicit_parts[0].zero_set()
    Z = rest[0].zero_set()
    if not explicit_parts:
        return Z
    pts = [p for p, _ in explicit_parts[0].entries]
    U = M.universe
    exc = ProdSet.points_of(U, pts)
    zeros = ProdSet.points_of(U, [p for p in pts if M.entry(*p) == 0])
    return Z.diff(exc).union(zeros)


# ----------------------------------------------------------- combination


def mat_add(A: SymMatrix, B: SymMatrix) -> SymMatrix:
    if A.H != B.H or A.G != B.G:
        raise ValueError("matrix shapes differ")
    if isinstance(A, Explicit) and isinstance(B, Explicit):
        ents = dict(A.entries)
        for p, k in B.entries:
            ents[p] = ents.get(p, 0) + k
        return Explicit.make(A.H, A.G, ents)
    if isinstance(A, Finitary) and isinstance(B, Finitary):
        return Finitary(A.H, A.G, A.terms + B.terms)
    if isinstance(A, Conv) and isinstance(B, Conv) and A.key == B.key:
        return Conv(A.H, A.G, A.kernel + B.kernel, A.key)
    pa = A.parts if isinstance(A, MSum) else (A,)
    pb = B.parts if isinstance(B, MSum) else (B,)
    return MSum(A.H, A.G, pa + pb)


# ---------------------------------------------------------------- products


def _pair(f: FormalSum, h: FormalSum):
    try:
        return pairing(f, h)
    except UndefinedPairing as e:
        raise UndefinedProduct("a row meets a column in infinitely many places", e.witness) from None


def _conv(f: FormalSum, g: FormalSum) -> FormalSum:
    try:
        return convolve(f, g)
    except UndefinedPairing as e:
        raise UndefinedProduct("infinitely many nonzero terms in a convolution entry", e.witness) from None


def mat_vec(M: SymMatrix, a: FormalSum) -> FormalSum:
    """``(M a)(h) = sum_t M(h, t*) a(t)``."""
    if a.universe != M.G:
        raise ValueError(f"column over {a.universe.name}, matrix columns over {M.G.name}")
    if isinstance(M, Explicit):
        G = M.G
        out: dict = {}
        for (h, g), k in M.entries:
            out[h] = out.get(h, 0) + k * a.at(G.star(g))
        return FormalSum.build(M.H, out, side="column")
    if isinstance(M, Finitary):
        out = FormalSum(M.H, side="column")
        for c, r in reduce_terms(M.terms):
            out = out + c.scale_right(_pair(r, a))
        return out.as_column()
    if isinstance(M, Conv):
        b = on_z(a.star()).reflect()
        c = _conv(M.kernel, b)
        if M.alpha == -1:
            c = c.reflect()
        return to_universe(c, M.H, "column")
    out = FormalSum(M.H, side="column")
    for p in M.parts:
        out = out + mat_vec(p, a)
    return out.as_column()


def vec_mat(gamma: FormalSum, M: SymMatrix) -> FormalSum:
    """``(gamma M)(g) = sum_h gamma(h*) M(h, g)``."""
    if gamma.universe != M.H:
        raise ValueError(f"row over {gamma.universe.name}, matrix rows over {M.H.name}")
    if isinstance(M, Explicit):
        H = M.H
        out: dict = {}
        for (h, g), k in M.entries:
            out[g] = out.get(g, 0) + gamma.at(H.star(h)) * k
        return FormalSum.build(M.G, out, side="row")
    if isinstance(M, Finitary):
        out = FormalSum(M.G, side="row")
        for c, r in reduce_terms(M.terms):
            out = out + r.scale_left(_pair(gamma, c))
        return out.as_row()
    if isinstance(M, Conv):
        m = on_z(gamma.star())
        if M.alpha == 1:
            m = m.reflect()
        return to_universe(_conv(m, M.kernel), M.G, "row")
    out = FormalSum(M.G, side="row")
    for p in M.parts:
        out = out + vec_mat(gamma, p)
    return out.as_row()


def row_col(gamma: FormalSum, a: FormalSum):
    """Row times column: ``sum_t gamma(t*) a(t)``."""
    return _pair(gamma, a)


def outer(a: FormalSum, gamma: FormalSum) -> Finitary:
    """Column times row: the rank-one matrix ``a gamma``."""
    return Finitary(a.universe, gamma.universe, ((a.as_column(), gamma.as_row()),))


def _pivot(f: FormalSum) -> int:
    """Some point where ``f`` is nonzero."""
    if f.finite:
        return f.finite[0][0]
    a, P = f.high if f.high else f.low
    step = 1 if f.high else -1
    return next(x for x in range(a, a + step * P.period, step) if P.at(x) != 0)


def reduce_terms(terms) -> tuple:
    """Rewrite ``sum c_i r_i`` so the columns are right-independent and the
    rows left-independent.  Per-term definedness is then exact."""
    cols: list = []
    for c, r in terms:
        for b in cols:
            lam = inv(b[0].at(b[2])) * c.at(b[2])
            if lam != 0:
                c = c - b[0].scale_right(lam)
                b[1] = b[1] + r.scale_left(lam)
        if not c.is_zero():
            cols.append([c, r, _pivot(c)])
    rows: list = []
    for c, r, _ in cols:
        if r.is_zero():
            continue
        for b in rows:
            mu = r.at(b[2]) * inv(b[1].at(b[2]))
            if mu != 0:
                r = r - b[1].scale_left(mu)
                b[0] = b[0] + c.scale_right(mu)
        if not r.is_zero():
            rows.append([c, r, _pivot(r)])
    return tuple((c.as_column(), r.as_row()) for c, r, _ in rows if not c.is_zero())


def simplify(M: SymMatrix) -> SymMatrix:
    if isinstance(M, Finitary):
        terms = reduce_terms(M.terms)
        if not terms:
            return zero_matrix(M.H, M.G)
        M = Finitary(M.H, M.G, terms)
        if M.is_finite():
            return M.to_explicit()
    return M


def mat_mul(A: SymMatrix, B: SymMatrix) -> SymMatrix:
    """``(A B)(j, g) = sum_h A(j, h*) B(h, g)``."""
    if A.G != B.H:
        raise ValueError("inner universes differ")
    if isinstance(A, MSum) or isinstance(B, MSum):
        pa = A.parts if isinstance(A, MSum) else (A,)
        pb = B.parts if isinstance(B, MSum) else (B,)
        out = None
        for p in pa:
            for q in pb:
                t = mat_mul(p, q)
                out = t if out is None else mat_add(out, t)
        return out
    if isinstance(A, Explicit):
        if not A.entries:
            return zero_matrix(A.H, B.G)
        A = A.to_finitary()
    if isinstance(B, Explicit):
        if not B.entries:
            return zero_matrix(A.H, B.G)
        B = B.to_finitary()
    if isinstance(A, Finitary):
        ts = reduce_terms(A.terms)
        return simplify(Finitary(A.H, B.G, tuple((c, vec_mat(r, B)) for c, r in ts)))
    if isinstance(B, Finitary):
        ts = reduce_terms(B.terms)
        return simplify(Finitary(A.H, B.G, tuple((mat_vec(A, c), r) for c, r in ts)))
    return _conv_conv(A, B)


def _conv_conv(A: Conv, B: Conv) -> Conv:
    if not all(isinstance(u, IntLine) for u in (A.H, A.G, B.G)):
        raise UnrepresentableResult("product of convolution matrices over a half-line is not a convolution")
    c = _sign(A.G) * B.alpha
    if c == -1:
        return Conv(A.H, B.G, _conv(A.kernel, B.kernel), A.key)
    k = _conv(A.kernel, B.kernel.reflect()).reflect()
    return Conv(A.H, B.G, k, "d" if A.key == "s" else "s")


def product(x, y):
    """Juxtaposition of scalars, rows, columns and matrices."""
    xs, ys = _kind(x), _kind(y)
    if xs == "scalar" and ys == "scalar":
        return x * y
    if xs == "scalar":
        return y.scale_left(x)
    if ys == "scalar":
        return x.scale_right(y)
    table = {
        ("row", "column"): row_col,
        ("column", "row"): outer,
        ("matrix", "column"): mat_vec,
        ("row", "matrix"): vec_mat,
        ("matrix", "matrix"): mat_mul,
    }
    fn = table.get((xs, ys))
    if fn is None:
        raise ValueError(f"cannot multiply a {xs} by a {ys}")
    return fn(x, y)


def _kind(x) -> str:
    if isinstance(x, SymMatrix):
        return "matrix"
    if isinstance(x, FormalSum):
        return x.side
    return "scalar"


def alternating_product(items: list):
    """Multiply left to right and check the right-to-left bracketing agrees."""
    if not items:
        raise ValueError("empty product")
    left = items[0]
    for y in items[1:]:
        left = product(left, y)
    right = items[-1]
    for x in reversed(items[:-1]):
        right = product(x, right)
    if not _same(left, right):
        raise ArithmeticError("bracketings disagree")
    return left


def _same(x, y) -> bool:
    if isinstance(x, SymMatrix) and isinstance(y, SymMatrix):
        return agree_on_window(x, y, 8) and (x.zero_set().equivalent(y.zero_set()) if _has_zero_set(x, y) else True)
    return x == y


def _has_zero_set(*ms) -> bool:
    try:
        for m in ms:
            m.zero_set()
    except UnrepresentableResult:
        return False
    return True


def agree_on_window(A: SymMatrix, B: SymMatrix, W: int) -> bool:
    for h in _range(A.H, -W, W):
        for g in _range(A.G, -W, W):
            if A.entry(h, g) != B.entry(h, g):
                return False
    return True


# -------------------------------------------------------------- continuity


def _require_balanced(*Fs):
    for F in Fs:
        if not fl.is_balanced(F).is_yes:
            raise NonBalanced(f"{F!r} is not certified balanced")


def angle_target(F_G: fl.Filter, F_H: fl.Filter) -> fl.Filter:
    """``<F_H, F_G^{perp*}>``, in its normalized form."""
    return fl.angle_pair(F_H, fl.star(fl.perp(F_G)))


def is_continuous_left(M: SymMatrix, F_G: fl.Filter, F_H: fl.Filter) -> fl.Tri:
    """Does ``a -> M a`` map ``FU(F_G)`` continuously into ``FU(F_H)``?"""
    _require_balanced(F_G, F_H)
    try:
        Z = M.zero_set()
    except UnrepresentableResult as e:
        return fl.unknown(f"zero set not representable: {e}")
    return fl.member(angle_target(F_G, F_H), Z)


def is_continuous_right(M: SymMatrix, F_G: fl.Filter, F_H: fl.Filter) -> fl.Tri:
    """Does ``gamma -> gamma M`` map ``FU(F_H^{perp*})``-rows continuously into
    ``FU(F_G^{perp*})``-rows?  Decided by the angle ``<F_H^{perp*}, F_G>``."""
    _require_balanced(F_G, F_H)
    try:
        Z = M.zero_set()
    except UnrepresentableResult as e:
        return fl.unknown(f"zero set not representable: {e}")
    return fl.member(fl.angle_pair(fl.star(fl.perp(F_H)), F_G), Z)


_SMALL = 64


def _params(M, *Fs):
    try:
        Z = M.zero_set()
    except UnrepresentableResult:
        Z = None
    return fl.stabilization_params(Z, *Fs)


def _common_rows(M, S: SymSet):
    """``{g : (s, g) in Z(M) for all s in S}``."""
    if S.is_finite() and S.size() <= _SMALL:
        out = SymSet.full(M.G)
        for s in S.points():
            out = out.inter(M.row(s).zero_set())
        return out
    Zc = M.support()
    return Zc.inter(ProdSet.rect(S, SymSet.full(M.G))).project_g().compl()


def _common_cols(M, T: SymSet):
    """``{h : (h, t) in Z(M) for all t in T}``."""
    if T.is_finite() and T.size() <= _SMALL:
        out = SymSet.full(M.H)
        for t in T.points():
            out = out.inter(M.col(t).zero_set())
        return out
    Zc = M.support()
    return Zc.inter(ProdSet.rect(SymSet.full(M.H), T)).project_h().compl()


def check_m1(M: SymMatrix, F_G: fl.Filter, F_H: fl.Filter) -> fl.Tri:
    """For every ``B`` in ``F_H^perp`` the rows over the complement of ``B``
    vanish together on a set of ``F_G^{perp*}``."""
    target = fl.star(fl.perp(F_G))
    dual = fl.perp(F_H)
    out = fl.YES
    try:
        for n in (0,) + _params(M, F_G, F_H):
            B = fl.base(dual, n)
            r = fl.member(target, _common_rows(M, B.compl()))
            if r.is_no:
                return fl.no(("B", B))
            out = out & r
    except UnrepresentableResult as e:
        return fl.unknown(f"sections not representable: {e}")
    return out


def check_m2(M: SymMatrix, F_G: fl.Filter, F_H: fl.Filter) -> fl.Tri:
    """For every ``A`` in ``F_G`` the columns ``M^{t*}``, ``t`` outside ``A``,
    vanish together on a set of ``F_H``."""
    out = fl.YES
    try:
        for n in (0,) + _params(M, F_G, F_H):
            A = fl.base(F_G, n)
            r = fl.member(F_H, _common_cols(M, A.compl().star()))
            if r.is_no:
                return fl.no(("A", A))
            out = out & r
    except UnrepresentableResult as e:
        return fl.unknown(f"sections not representable: {e}")
    return out


# ------------------------------------------------------------------ rings


def _require_continuous(F, *ms):
    for m in ms:
        r = is_continuous_left(m, F, F)
        if not r.is_yes:
            raise NotContinuous(f"operand is not continuous ({r!r})")


def ring_add(A: SymMatrix, B: SymMatrix, F: fl.Filter) -> SymMatrix:
    _require_continuous(F, A, B)
    return mat_add(A, B)


def ring_mul(A: SymMatrix, B: SymMatrix, F: fl.Filter) -> SymMatrix:
    _require_continuous(F, A, B)
    return mat_mul(A, B)


# --------------------------------------------------- families and duality


def image_family_live(M: SymMatrix, index: SymSet, coeffs: FormalSum) -> SymSet:
    return index.inter(coeffs.support())


def image_family_summable(M: SymMatrix, index: SymSet, coeffs: FormalSum, F_H: fl.Filter) -> fl.Tri:
    """Is ``{M^{t*} k_t : t in index}`` an ``F_H``-summable family?"""
    live = image_family_live(M, index, coeffs)
    if live.is_empty():
        return fl.YES
    Zc = M.support()
    common = Zc.inter(ProdSet.rect(SymSet.full(M.H), live.star())).project_h().compl()
    return fl.member(F_H, common)


def image_family_value(M: SymMatrix, index: SymSet, coeffs: FormalSum, h: int):
    """``sum_t M(h, t*) k_t`` over the live indices; the sum must be finite."""
    live = image_family_live(M, index, coeffs)
    row_support = M.row(h).support().star()
    terms = live.inter(row_support)
    if not terms.is_finite():
        raise UndefinedProduct(f"infinitely many images are nonzero at h={h}", terms)
    G = M.G
    total = Fraction(0)
    for t in terms.points():
        total = total + M.entry(h, G.star(t)) * coeffs.at(t)
    return total


def window_set(u, W: int) -> SymSet:
    return SymSet.interval(u, -W, W)


def pairing_witness(f: FormalSum, F: fl.Filter):
    """A column ``h = charFn(complement of B_n)`` in ``FU(F)`` whose pairing
    with ``f`` is undefined, or ``None`` if none is found."""
    from .sums import char_fn, pairing_defined

    for n in (0,) + fl.stabilization_params(F, f):
        h = char_fn(fl.base(F, n).compl())
        if not pairing_defined(f, h):
            return h
    return None


@dataclass(frozen=True)
class DualForm:
    """The linear form ``a -> gamma a`` on ``FU(F)`` given by a row."""

    gamma: FormalSum
    F: fl.Filter

    def __call__(self, a: FormalSum):
        r = fl.member(self.F, a.zero_set())
        if not r.is_yes:
            raise ValueError("column is not in the space of the form")
        return row_col(self.gamma, a)


def dual_form(gamma: FormalSum, F: fl.Filter) -> DualForm:
    from .sums import perp_star

    r = fl.member(perp_star(F), gamma.zero_set())
    if not r.is_yes:
        raise UndefinedProduct("row is outside the dual space", pairing_witness(gamma, F))
    return DualForm(gamma.as_row(), F)
