"""Formal sums ``G -> K`` with finite-plus-periodic support.

A :class:`FormalSum` stores a finite part together with at most one periodic
pattern on a low ray ``(-inf, a]`` and one on a high ray ``[b, inf)``.  The
value at ``x`` on a ray is ``coeffs[x % period]``, so a pattern is anchored
to absolute residues.  The stored form is canonical (minimal periods and
maximal rays, with zeros dropped from the finite part), so ``==`` is
equality of functions.

A pattern may contain zero coefficients.  Its support is then periodic and
has no interval normal form, so :meth:`FormalSum.support` raises
:class:`UnrepresentableResult`; arithmetic and pairings still work.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from math import gcd
from typing import Callable, Iterable, Optional

from .coefficients import as_scalar, format_scalar
from .filters import (
    Filter,
    Tri,
    YES,
    base,
    cut_of,
    member,
    no,
    perp,
    stabilization_params,
)
from .symsets import INF, NEG_INF, FiniteU, IntHalfLine, IntLine, SymSet, UniverseError


class UnrepresentableResult(ValueError):
    """The exact result exists but leaves the finite-plus-periodic fragment."""


class UndefinedPairing(ValueError):
    def __init__(self, msg, witness=None):
        super().__init__(msg)
        self.witness = witness


class NotSummable(ValueError):
    def __init__(self, msg, witness=None):
        super().__init__(msg)
        self.witness = witness


class InvalidNeighborhood(ValueError):
    pass


class SideError(TypeError):
    pass


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


@dataclass(frozen=True)
class Pattern:
    period: int
    coeffs: tuple

    def at(self, x: int):
        return self.coeffs[x % self.period]

    def widen(self, p: int) -> Pattern:
        return Pattern(p, tuple(self.coeffs[i % self.period] for i in range(p)))

    def minimal(self) -> Pattern:
        p = self.period
        for d in range(1, p + 1):
            if p % d == 0 and all(self.coeffs[i] == self.coeffs[i % d] for i in range(p)):
                return Pattern(d, self.coeffs[:d])
        return self

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def has_gaps(self) -> bool:
        return any(c == 0 for c in self.coeffs)

    def map(self, fn) -> Pattern:
        return Pattern(self.period, tuple(fn(c) for c in self.coeffs))


def _pattern_from(fn: Callable[[int], object], start: int, period: int) -> Pattern:
    coeffs = [None] * period
    for x in range(start, start + period):
        coeffs[x % period] = fn(x)
    return Pattern(period, tuple(coeffs))


@dataclass(frozen=True)
class FormalSum:
    """An element of ``Map(G, K)``; ``side`` marks it as a row or a column."""

    universe: object
    finite: tuple = ()
    low: Optional[tuple] = None  # (a, Pattern): pattern on (-inf, a]
    high: Optional[tuple] = None  # (b, Pattern): pattern on [b, inf)
    side: str = field(default="column", compare=False)

    # ---- construction
    @classmethod
    def build(cls, u, finite: dict, low=None, high=None, side="column") -> FormalSum:
        """Canonicalize a loose description.  ``finite`` may hold zeros but
        no point inside a ray."""
        if isinstance(u, (FiniteU,)) and (low or high):
            raise UniverseError("finite universes carry no rays")
        if low is not None and "-" not in u.ends:
            raise UniverseError(f"{u.name} has no lower end")
        if high is not None and "+" not in u.ends:
            raise UniverseError(f"{u.name} has no upper end")
        fin = {int(x): as_scalar(v) for x, v in finite.items() if v != 0}
        for x in fin:
            if not (u.lo <= x <= u.hi):
                raise UniverseError(f"point {x} outside {u.name}")
        low = _check_ray(low)
        high = _check_ray(high)
        if low and high and high[0] <= low[0]:
            raise ValueError("overlapping rays")
        a = low[0] if low else None
        b = high[0] if high else None
        if (a is not None and any(x <= a for x in fin)) or (b is not None and any(x >= b for x in fin)):
            raise ValueError("finite point inside a ray")

        def value(x):
            if b is not None and x >= b:
                return high[1].at(x)
            if a is not None and x <= a:
                return low[1].at(x)
            return fin.get(x, 0)

        if high:
            P = high[1]
            while True:
                y = b - 1
                if y < u.lo:
                    break
                if a is not None and y <= a and low[1] == P:
                    # the whole line follows one pattern: split at 0
                    a, b = -1, 0
                    break
                if value(y) != P.at(y):
                    break
                fin.pop(y, None)
                b = y
                if a is not None and y <= a:
                    a = y - 1
            high = (b, P)
            if low:
                low = (a, low[1])
        if low and (not high or a + 1 < b):
            P = low[1]
            while True:
                y = a + 1
                if b is not None and y >= b:
                    break
                if value(y) != P.at(y):
                    break
                fin.pop(y, None)
                a = y
            low = (a, P)
        return cls(u, tuple(sorted(fin.items())), low, high, side)

    # ---- evaluation
    def at(self, x: int):
        if self.high and x >= self.high[0]:
            return self.high[1].at(x)
        if self.low and x <= self.low[0]:
            return self.low[1].at(x)
        for y, v in self.finite:
            if y == x:
                return v
        return Fraction(0)

    __call__ = at

    def support(self) -> SymSet:
        if any(ray and ray[1].has_gaps() for ray in (self.low, self.high)):
            raise UnrepresentableResult("periodic support with gaps", self.hull())
        return self.hull()

    def hull(self) -> SymSet:
        """The support with every ray filled in; equal to it without gaps."""
        ivs = [(x, x) for x, _ in self.finite]
        if self.low:
            a, P = self.low
            while P.at(a) == 0:
                a -= 1
            ivs.append((NEG_INF, a))
        if self.high:
            b, P = self.high
            while P.at(b) == 0:
                b += 1
            ivs.append((b, INF))
        return SymSet.make(self.universe, ivs)

    def zero_set(self) -> SymSet:
        return self.support().compl()

    def is_zero(self) -> bool:
        return not self.finite and not self.low and not self.high

    def is_finite(self) -> bool:
        return not self.low and not self.high

    def middle(self) -> tuple:
        """A finite interval outside of which only the rays contribute."""
        xs = [x for x, _ in self.finite]
        if self.low:
            xs.append(self.low[0])
        if self.high:
            xs.append(self.high[0])
        if not xs:
            return (0, -1)
        return (min(xs), max(xs))

    def max_const(self) -> int:
        return self.hull().max_const()

    def with_side(self, side: str) -> FormalSum:
        if side not in ("row", "column"):
            raise ValueError(side)
        return replace(self, side=side)

    def as_row(self) -> FormalSum:
        return self.with_side("row")

    def as_column(self) -> FormalSum:
        return self.with_side("column")

    # ---- arithmetic
    def _combine(self, other: FormalSum, op) -> FormalSum:
        if other.universe != self.universe:
            raise UniverseError("formal sums over different universes")
        return _pointwise([self, other], lambda vs: op(vs[0], vs[1]), self.side)

    def __add__(self, other):
        return self._combine(other, lambda x, y: x + y)

    def __sub__(self, other):
        return self._combine(other, lambda x, y: x - y)

    def __neg__(self):
        return _pointwise([self], lambda vs: -vs[0], self.side)

    def scale_left(self, k) -> FormalSum:
        k = as_scalar(k)
        return _pointwise([self], lambda vs: k * vs[0], self.side)

    def scale_right(self, k) -> FormalSum:
        k = as_scalar(k)
        return _pointwise([self], lambda vs: vs[0] * k, self.side)

    def __rmul__(self, k):
        if isinstance(k, FormalSum):
            return NotImplemented
        if self.side != "row":
            raise SideError("left scalar action is exposed on rows; use scale_left")
        return self.scale_left(k)

    def __mul__(self, k):
        if isinstance(k, FormalSum):
            return NotImplemented
        if self.side != "column":
            raise SideError("right scalar action is exposed on columns; use scale_right")
        return self.scale_right(k)

    # ---- reshaping
    def restrict(self, A: SymSet) -> FormalSum:
        """``f`` on ``A``, zero elsewhere."""
        if A.universe != self.universe:
            raise UniverseError("restriction set over a different universe")
        u = self.universe
        lo, hi = _span([self], [A])
        low = (lo - 1, self.low[1]) if self.low and A.has_ray("-") else None
        high = (hi + 1, self.high[1]) if self.high and A.has_ray("+") else None
        fin = {x: self.at(x) for x in _range(u, lo, hi) if A.contains(x)}
        return FormalSum.build(u, fin, low, high, self.side)

    def split_by(self, A: SymSet) -> tuple:
        return (self.restrict(A), self.restrict(A.compl()))

    def truncate(self, W: SymSet) -> FormalSum:
        if not W.is_finite():
            raise ValueError("truncation window must be finite")
        return self.restrict(W)

    def shift(self, k: int) -> FormalSum:
        """``x -> f(x - k)``: multiplication by ``t^k`` on ℤ."""
        u = self.universe
        if not isinstance(u, IntLine):
            raise UniverseError("shift needs the integer line")
        fin = {x + k: v for x, v in self.finite}
        low = (self.low[0] + k, _reanchor(self.low[1], k)) if self.low else None
        high = (self.high[0] + k, _reanchor(self.high[1], k)) if self.high else None
        return FormalSum.build(u, fin, low, high, self.side)

    def reflect(self) -> FormalSum:
        """``x -> f(-x)`` on ℤ."""
        u = self.universe
        if not isinstance(u, IntLine):
            raise UniverseError("reflection needs the integer line")
        fin = {-x: v for x, v in self.finite}
        low = (-self.high[0], _mirror(self.high[1])) if self.high else None
        high = (-self.low[0], _mirror(self.low[1])) if self.low else None
        return FormalSum.build(u, fin, low, high, self.side)

    def star(self) -> FormalSum:
        """``x -> f(x*)``."""
        u = self.universe
        if isinstance(u, FiniteU):
            return FormalSum.build(u, {u.star(x): v for x, v in self.finite}, side=self.side)
        if u.involution == "identity":
            return self
        return self.reflect()

    def lift(self, target) -> FormalSum:
        """Extend by zero into a larger one-dimensional universe."""
        return FormalSum.build(target, dict(self.finite), self.low, self.high, self.side)

    def restrict_universe(self, target) -> FormalSum:
        """Restrict to a sub-universe (for example ℤ to ℕ)."""
        part = self.restrict(SymSet.interval(self.universe, target.lo, target.hi))
        if part.low:
            raise UniverseError(f"support leaves {target.name}")
        return FormalSum.build(target, dict(part.finite), None, part.high, self.side)

    def to_dsl(self) -> str:
        parts = []
        if self.finite:
            parts.append("fsum{" + ", ".join(f"{x}:{format_scalar(v)}" for x, v in self.finite) + "}")
        for end, ray in (("low", self.low), ("high", self.high)):
            if ray:
                x, P = ray
                iv = f"(-inf..{x}]" if end == "low" else f"[{x}..inf)"
                cs = ", ".join(format_scalar(c) for c in P.coeffs)
                parts.append(f"pat({iv}, period={P.period}, [{cs}])")
        if not parts:
            return "fsum{}"
        return " + ".join(parts)

    def __repr__(self):
        return f"FormalSum<{self.universe.name},{self.side}>({self.to_dsl()})"


def _check_ray(ray):
    if ray is None:
        return None
    x, P = ray
    P = Pattern(P.period, tuple(as_scalar(c) for c in P.coeffs))
    if P.is_zero():
        return None
    return (int(x), P.minimal())


def _reanchor(P: Pattern, k: int) -> Pattern:
    # value at y is old value at y - k
    return _pattern_from(lambda y: P.at(y - k), 0, P.period)


def _mirror(P: Pattern) -> Pattern:
    return _pattern_from(lambda y: P.at(-y), 0, P.period)


def _span(items, sets=()) -> tuple:
    """Finite interval containing every anchor of the given sums and every
    finite endpoint of the given sets."""
    xs = []
    for f in items:
        m0, m1 = f.middle()
        if m0 <= m1:
            xs += [m0, m1]
    for A in sets:
        xs += [x for iv in A.ivs for x in iv if x not in (INF, NEG_INF)]
    if not xs:
        return (0, 0)
    return (min(xs), max(xs))


def _range(u, lo, hi):
    lo = max(lo, u.lo)
    hi = min(hi, u.hi)
    return range(int(lo), int(hi) + 1)


def _pointwise(items: list, fn, side) -> FormalSum:
    u = items[0].universe
    lo, hi = _span(items)
    low = high = None
    value = lambda x: fn([f.at(x) for f in items])
    lows = [f.low[1].period for f in items if f.low]
    highs = [f.high[1].period for f in items if f.high]
    if lows:
        p = 1
        for q in lows:
            p = _lcm(p, q)
        low = (lo - 1, _pattern_from(value, lo - p, p))
    if highs:
        p = 1
        for q in highs:
            p = _lcm(p, q)
        high = (hi + 1, _pattern_from(value, hi + 1, p))
    fin = {x: value(x) for x in _range(u, lo, hi)}
    return _build_loose(u, fin, low, high, side)


def _build_loose(u, fin, low, high, side) -> FormalSum:
    """Like :meth:`FormalSum.build`, but a partially zero pattern is first
    shrunk: this happens legitimately only when it is entirely zero."""
    low = _drop_zero(low)
    high = _drop_zero(high)
    return FormalSum.build(u, fin, low, high, side)


def _drop_zero(ray):
    if ray is None:
        return None
    if ray[1].is_zero():
        return None
    return ray


# ------------------------------------------------------------ constructors


def zero(u, side="column") -> FormalSum:
    return FormalSum(u, side=side)


def delta(u, x: int, k=1, side="column") -> FormalSum:
    return FormalSum.build(u, {x: k}, side=side)


def fsum(u, entries: dict, side="column") -> FormalSum:
    return FormalSum.build(u, entries, side=side)


def pattern(u, A: SymSet, period: int, coeffs, side="column") -> FormalSum:
    """The periodic pattern ``coeffs[x % period]`` on ``A``."""
    if len(coeffs) != period or period < 1:
        raise ValueError("need exactly `period` coefficients")
    P = Pattern(period, tuple(as_scalar(c) for c in coeffs))
    full = FormalSum.build(u, {}, None, None, side)
    if P.is_zero():
        return full
    lo, hi = _span([], [A])
    low = (lo - 1, P) if A.has_ray("-") else None
    high = (hi + 1, P) if A.has_ray("+") else None
    fin = {x: P.at(x) for x in _range(u, lo, hi) if A.contains(x)}
    return FormalSum.build(u, fin, low, high, side)


def char_fn(A: SymSet, side="column") -> FormalSum:
    """1 on ``A`` and 0 elsewhere."""
    return pattern(A.universe, A, 1, [1], side)


# ------------------------------------------------------------ convolution


def convolution_defined(f: FormalSum, g: FormalSum) -> bool:
    return not ((f.low and g.high) or (f.high and g.low))


def convolve(f: FormalSum, g: FormalSum) -> FormalSum:
    """``(f*g)(n) = sum_u f(u) g(n-u)`` over ℤ, keeping factor order."""
    u = f.universe
    if not isinstance(u, IntLine) or g.universe != u:
        raise UniverseError("convolution needs two sums over the integer line")
    if not convolution_defined(f, g):
        raise UndefinedPairing("a low ray meets a high ray: infinitely many terms", (f.hull(), g.hull()))
    out = FormalSum(u, side=f.side)
    if f.is_finite():
        for x, v in f.finite:
            out = out + g.shift(x).scale_left(v)
        return out
    if g.is_finite():
        for x, v in g.finite:
            out = out + f.shift(x).scale_right(v)
        return out
    if f.low:
        return convolve(f.reflect(), g.reflect()).reflect().with_side(f.side)
    f_fin, f_ray = _split_high(f)
    g_fin, g_ray = _split_high(g)
    out = convolve(f_fin, g) + convolve(f_ray, g_fin) + _ray_product(f_ray, g_ray)
    return out.with_side(f.side)


def _split_high(f: FormalSum) -> tuple:
    b = f.high[0]
    rest = FormalSum.build(f.universe, dict(f.finite), f.low, None, f.side)
    ray = FormalSum(f.universe, (), None, f.high, f.side)
    return rest, ray


def _ray_product(f: FormalSum, g: FormalSum) -> FormalSum:
    """Product of two pure high-ray patterns via ``t^a P(t) / (1 - t^L)``."""
    (a, P), (b, Q) = f.high, g.high
    L = _lcm(P.period, Q.period)
    p = [P.at(a + i) for i in range(L)]
    q = [Q.at(b + i) for i in range(L)]
    zero_ = p[0] * 0
    N = [zero_] * (2 * L)
    for i, x in enumerate(p):
        for j, y in enumerate(q):
            N[i + j] = N[i + j] + x * y
    # N = R (1 - t^L) with deg R < L, otherwise the result is not periodic
    R = [zero_] * L
    for i in range(L):
        R[i] = N[i] + (R[i - L] if i >= L else zero_)
    for i in range(L, 2 * L):
        if N[i] + R[i - L] != 0:
            raise UnrepresentableResult("product of the two patterns grows polynomially")
    start = a + b
    pat = _pattern_from(lambda x: R[(x - start) % L], start, L)
    if pat.is_zero():
        return FormalSum(f.universe, side=f.side)
    return FormalSum.build(f.universe, {}, None, (start, pat), f.side)


# ----------------------------------------------------------------- pairing


def _overlap(f: FormalSum, h: FormalSum) -> FormalSum:
    """A sum supported exactly on ``supp(f) & supp(h)*``."""
    if f.universe != h.universe:
        raise UniverseError("pairing over different universes")
    hs = h.star()
    return _pointwise([f, hs], lambda vs: Fraction(int(vs[0] != 0 and vs[1] != 0)), f.side)


def pairing_defined(f: FormalSum, h: FormalSum) -> bool:
    return _overlap(f, h).is_finite()


def pairing(f: FormalSum, h: FormalSum):
    """``<f, h> = sum_x f(x) h(x*)``."""
    meet_ = _overlap(f, h)
    if not meet_.is_finite():
        raise UndefinedPairing("supp(f) meets supp(h)* in an infinite set", meet_.hull())
    u = f.universe
    total = Fraction(0)
    for x, _ in meet_.finite:
        total = total + f.at(x) * h.at(u.star(x))
    return total


# ------------------------------------------------------ spaces and sums


def in_space(f: FormalSum, F: Filter) -> Tri:
    try:
        Z = f.zero_set()
    except UnrepresentableResult:
        # periodic gaps: a cut only asks for the core and ray germs
        c = cut_of(F)
        if not f.restrict(c.core).is_zero():
            return no(c.core)
        for e in sorted(c.ends):
            if (f.high if e == "+" else f.low) is not None:
                return no(f.hull())
        return YES
    return member(F, Z)


def perp_star(F: Filter) -> Filter:
    from .filters import star

    return star(perp(F))


@dataclass(frozen=True)
class PatternedFamily:
    """The family ``{delta^t * k(t) : t in index}``."""

    index: SymSet
    coeffs: FormalSum

    def __post_init__(self):
        if self.index.universe != self.coeffs.universe:
            raise UniverseError("index and coefficients over different universes")

    @property
    def universe(self):
        return self.index.universe

    def live(self) -> SymSet:
        """Indices whose member is nonzero."""
        return self.index.inter(self.coeffs.support())

    def member_at(self, t: int) -> FormalSum:
        return delta(self.universe, t, self.coeffs.at(t))

    def zero_intersection(self) -> SymSet:
        return self.live().compl()

    def pointwise_sum(self) -> FormalSum:
        return self.coeffs.restrict(self.index)

    def partial(self, S: SymSet) -> FormalSum:
        return self.coeffs.restrict(self.index.inter(S))


def g_sum(family, F: Filter) -> FormalSum:
    """``F``-sum of a finite list of sums or of a :class:`PatternedFamily`.

    Raises :class:`NotSummable` with the offending intersection of zero sets
    when it is not in ``F``; an undecided membership also raises.
    """
    if isinstance(family, PatternedFamily):
        Z = family.zero_intersection()
        total = family.pointwise_sum()
    else:
        items = list(family)
        if not items:
            return FormalSum(F.universe)
        Z = items[0].zero_set()
        total = items[0]
        for f in items[1:]:
            Z = Z.inter(f.zero_set())
            total = total + f
    r = member(F, Z)
    if r.is_no:
        raise NotSummable("intersection of zero sets is not in the filter", Z)
    if not r.decided:
        raise NotSummable(f"summability undecided: {r.reason}", Z)
    return total


def is_summable(family, F: Filter) -> Tri:
    try:
        g_sum(family, F)
    except NotSummable as e:
        return no(e.witness)
    return YES


def tail_converges(family: PatternedFamily, F: Filter, params=None) -> Tri:
    """Do the finite partial sums converge to the pointwise sum in the
    topology of ``F``?  For each base neighbourhood ``U(A, F)`` the tail
    outside a finite index set must lie in it."""
    total = family.pointwise_sum()
    if not in_space(total, F).is_yes:
        return no(("limit outside the space", total.zero_set()))
    dual = cut_of(perp(F))
    n1, n2 = params or stabilization_params(F, family.index, family.coeffs)
    for m in (0, n1, n2):
        A = dual.base(m)
        S = family.live().diff(A)
        if not S.is_finite():
            return no(("neighbourhood", A))
        tail = total - family.partial(S)
        if not in_neighborhood(tail, A, F).is_yes:
            return no(("neighbourhood", A))
    return YES


def in_neighborhood(f: FormalSum, A: SymSet, F: Filter) -> Tri:
    """Is ``f`` in ``U(A, F) = {f in FU(F) : Z(f) contains the complement of A}``?"""
    if not member(perp(F), A).is_yes:
        raise InvalidNeighborhood(f"{A.to_dsl()} is not in the perp filter")
    inside = in_space(f, F)
    if not inside.is_yes:
        return inside
    extra = f.support().diff(A)
    return YES if extra.is_empty() else no(extra)


def join_split(f: FormalSum, F1: Filter, F2: Filter) -> tuple:
    """Write ``f`` in ``FU(F1 v F2)`` as ``h1 + h2`` with ``h_i`` in ``FU(F_i)``."""
    Z = f.zero_set()
    n1, n2 = stabilization_params(F1, F2, Z)
    for n in (n1, n2):
        B1, B2 = base(F1, n), base(F2, n)
        if B1.inter(B2).subset_of(Z):
            return f.split_by(B2)
    raise NotSummable("sum is not in the space of the join", Z)
