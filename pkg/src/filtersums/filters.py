"""Filters on universes, as immutable ASTs with a three-valued membership engine.

Two independent reasoning routes are provided.

* On a one-dimensional universe every filter built from the atoms and
  combinators here equals a *cut* ``(S, E)``: the sets that contain the core
  ``S`` and a ray towards every end in ``E``.  The cut of each node is computed
  compositionally, which makes membership, comparison, properness,
  balancedness and self-adjointness exact.
* Every node also exposes a decreasing parametric base ``base(n)``.
  Membership in combinators (and in all product filters) unfolds the
  definition over that base, evaluating at parameters past every constant
  that occurs in the query, where the answer no longer changes.

Upper-case classes are raw AST nodes; the lower-case constructors
(:func:`perp`, :func:`meet`, :func:`angle_pair`, ...) apply the identity
rewrites and return normalized filters.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

from .symsets import (
    FiniteU,
    IntHalfLine,
    IntLine,
    NEG_INF,
    INF,
    ProdSet,
    ProductU,
    SymSet,
    UniverseError,
    UnorderedUniverse,
)


# ----------------------------------------------------------------- Tri


@dataclass(frozen=True)
class Tri:
    """Three-valued verdict; ``Unknown`` always carries a reason."""

    value: str
    reason: Optional[str] = None
    witness: object = field(default=None, compare=False)

    def __post_init__(self):
        if self.value not in ("yes", "no", "unknown"):
            raise ValueError(self.value)
        if self.value == "unknown" and not self.reason:
            raise ValueError("unknown verdicts need a reason")

    @property
    def is_yes(self) -> bool:
        return self.value == "yes"

    @property
    def is_no(self) -> bool:
        return self.value == "no"

    @property
    def decided(self) -> bool:
        return self.value != "unknown"

    def __bool__(self):
        raise TypeError("Tri has no truth value; use .is_yes / .is_no")

    def __and__(self, other: Tri) -> Tri:
        if self.is_no:
            return self
        if other.is_no:
            return other
        if self.is_yes and other.is_yes:
            return YES
        return self if not self.decided else other

    def __or__(self, other: Tri) -> Tri:
        if self.is_yes:
            return self
        if other.is_yes:
            return other
        if self.is_no and other.is_no:
            return self
        return self if not self.decided else other

    def __invert__(self) -> Tri:
        if self.is_yes:
            return Tri("no", witness=self.witness)
        if self.is_no:
            return Tri("yes", witness=self.witness)
        return self

    def with_witness(self, w) -> Tri:
        return Tri(self.value, self.reason, w)

    def __repr__(self):
        if self.value == "unknown":
            return f"Unknown({self.reason})"
        return self.value.capitalize()


YES = Tri("yes")
NO = Tri("no")


def unknown(reason: str) -> Tri:
    return Tri("unknown", reason)


def no(witness=None) -> Tri:
    return Tri("no", witness=witness)


def tri(flag: bool, witness=None) -> Tri:
    return Tri("yes" if flag else "no", witness=None if flag else witness)


class FilterError(ValueError):
    pass


# ---------------------------------------------------------------- AST


class Filter:
    """Base class of all filter nodes."""

    universe: object

    @property
    def is_product(self) -> bool:
        return isinstance(self.universe, ProductU)

    def children(self) -> tuple:
        return ()

    def max_const(self) -> int:
        return max([c.max_const() for c in self.children()] or [0])


def _one_dim(u, what):
    if isinstance(u, ProductU):
        raise UniverseError(f"{what} needs a one-dimensional universe")


@dataclass(frozen=True)
class All(Filter):
    """The improper filter: every subset."""

    universe: object


@dataclass(frozen=True)
class Cof(Filter):
    """The Frechet filter of cofinite sets."""

    universe: object


@dataclass(frozen=True)
class Dcc(Filter):
    """Sets whose complement satisfies the descending chain condition."""

    universe: object

    def __post_init__(self):
        _one_dim(self.universe, "Dcc")
        if not getattr(self.universe, "ordered", False):
            raise UnorderedUniverse("Dcc needs an ordered universe")


@dataclass(frozen=True)
class Acc(Filter):
    universe: object

    def __post_init__(self):
        _one_dim(self.universe, "Acc")
        if not getattr(self.universe, "ordered", False):
            raise UnorderedUniverse("Acc needs an ordered universe")


@dataclass(frozen=True)
class Principal(Filter):
    """Filter generated by finitely many sets: supersets of their intersection."""

    universe: object
    bases: tuple

    def __post_init__(self):
        if not self.bases:
            raise FilterError("principal filter needs at least one base set")
        for b in self.bases:
            if b.universe != self.universe:
                raise UniverseError("base set over a different universe")

    def core(self):
        out = self.bases[0]
        for b in self.bases[1:]:
            out = out.inter(b)
        return out

    def max_const(self) -> int:
        return max(b.max_const() for b in self.bases)


@dataclass(frozen=True)
class _Binary(Filter):
    left: Filter
    right: Filter

    def __post_init__(self):
        if self.left.universe != self.right.universe:
            raise UniverseError("filters over different universes")

    @property
    def universe(self):
        return self.left.universe

    def children(self):
        return (self.left, self.right)


class Meet(_Binary):
    """Intersection of two filters."""


class Join(_Binary):
    """Smallest filter containing both."""


class Quotient(_Binary):
    """``left : right`` = sets A with A ∪ A' in ``left`` for all A' in ``right``."""


@dataclass(frozen=True)
class Perp(Filter):
    inner: Filter

    @property
    def universe(self):
        return self.inner.universe

    def children(self):
        return (self.inner,)


@dataclass(frozen=True)
class Star(Filter):
    inner: Filter

    def __post_init__(self):
        _one_dim(self.inner.universe, "Star")

    @property
    def universe(self):
        return self.inner.universe

    def children(self):
        return (self.inner,)


@dataclass(frozen=True)
class Induced(Filter):
    """Filter induced on ``C``, lifted to the whole universe as
    ``{X : X ∪ (G minus C) in F}``; its trace on ``C`` is ``{A ∩ C : A in F}``."""

    inner: Filter
    C: SymSet

    def __post_init__(self):
        _one_dim(self.inner.universe, "Induced")
        if self.C.universe != self.inner.universe:
            raise UniverseError("induced set over a different universe")

    @property
    def universe(self):
        return self.inner.universe

    def children(self):
        return (self.inner,)

    def max_const(self) -> int:
        return max(self.inner.max_const(), self.C.max_const())


@dataclass(frozen=True)
class _Pair(Filter):
    fh: Filter
    fg: Filter

    def __post_init__(self):
        _one_dim(self.fh.universe, type(self).__name__)
        _one_dim(self.fg.universe, type(self).__name__)

    @property
    def universe(self):
        return ProductU(self.fh.universe, self.fg.universe)

    def children(self):
        return (self.fh, self.fg)


class Tensor(_Pair):
    """Base: complements of ``B̄ × Ā``."""


class CofPair(_Pair):
    """Complements of finite unions of ``{h} × Ā`` and ``B̄ × {g}``."""


class Angle(_Pair):
    """The angle filter, evaluated directly from its defining conditions."""


class TimesProd(_Pair):
    """The classical product filter with base ``B × A``."""


# --------------------------------------------------------- 1-D cut form


@dataclass(frozen=True)
class Cut:
    """Sets containing ``core`` and a ray towards each end in ``ends``.

    Normalized so that ``ends`` contains every end at which ``core`` has a ray;
    under that normalization distinct cuts are distinct filters.
    """

    core: SymSet
    ends: frozenset

    @staticmethod
    def make(core: SymSet, ends) -> Cut:
        return Cut(core, frozenset(ends) | core.germs())

    @property
    def universe(self):
        return self.core.universe

    def member(self, X: SymSet) -> Tri:
        missing = self.core.diff(X)
        if not missing.is_empty():
            return no(missing)
        for e in sorted(self.ends):
            if not X.has_ray(e):
                return no(X.compl())
        return YES

    def base(self, n: int) -> SymSet:
        out = self.core
        for e in self.ends:
            out = out.union(ray(self.universe, e, n))
        return out

    def leq(self, other: Cut) -> bool:
        """Containment of filters as families: ``self ⊆ other``."""
        return other.core.subset_of(self.core) and other.ends <= self.ends


def ray(u, end: str, n: int) -> SymSet:
    if end == "-":
        return SymSet.interval(u, NEG_INF, -n)
    return SymSet.interval(u, n, INF)


def window(u, n: int) -> SymSet:
    return SymSet.interval(u, -n, n)


@lru_cache(maxsize=4096)
def cut_of(F: Filter) -> Cut:
    u = F.universe
    if isinstance(u, ProductU):
        raise UniverseError("cut form exists only on one-dimensional universes")
    ends = frozenset(u.ends)
    empty = SymSet.empty(u)
    if isinstance(F, All):
        return Cut(empty, frozenset())
    if isinstance(F, Cof):
        return Cut(empty, ends)
    if isinstance(F, Dcc):
        return Cut(empty, ends & {"-"})
    if isinstance(F, Acc):
        return Cut(empty, ends & {"+"})
    if isinstance(F, Principal):
        return Cut.make(F.core(), ())
    if isinstance(F, (Meet, Join, Quotient)):
        a, b = cut_of(F.left), cut_of(F.right)
        if isinstance(F, Meet):
            return Cut.make(a.core.union(b.core), a.ends | b.ends)
        if isinstance(F, Join):
            return Cut.make(a.core.inter(b.core), a.ends & b.ends)
        return Cut.make(a.core.diff(b.core), a.ends - b.ends)
    if isinstance(F, Perp):
        return Cut(empty, ends - cut_of(F.inner).ends)
    if isinstance(F, Star):
        c = cut_of(F.inner)
        return Cut.make(c.core.star(), {u.star_end(e) for e in c.ends})
    if isinstance(F, Induced):
        c = cut_of(F.inner)
        return Cut.make(c.core.inter(F.C), c.ends & F.C.germs())
    raise FilterError(f"no cut form for {type(F).__name__}")


def from_cut(c: Cut) -> Filter:
    """Smallest AST denoting the cut."""
    u = c.universe
    ends = frozenset(u.ends)

    def atom(E):
        if not E:
            return All(u)
        if E == ends:
            return Cof(u)
        return Dcc(u) if E == {"-"} else Acc(u)

    if c.core.is_empty():
        return atom(c.ends)
    p = Principal(u, (c.core,))
    rest = c.ends - c.core.germs()
    return p if not rest else Meet(p, atom(rest))


# ------------------------------------------------------- parametric bases


def stabilization_params(*objs) -> tuple:
    m = 0
    for o in objs:
        if o is not None:
            m = max(m, o.max_const())
    n1 = 2 * m + 4
    return n1, 2 * n1 + 3


def base(F: Filter, n: int):
    """The n-th member of a decreasing base of ``F``, or ``None`` if the node
    has no parametric base in this engine."""
    u = F.universe
    if not isinstance(u, ProductU):
        return _base_1d(F, n)
    return _base_prod(F, n)


def _base_1d(F: Filter, n: int) -> SymSet:
    u = F.universe
    if isinstance(F, All):
        return SymSet.empty(u)
    if isinstance(F, Cof):
        return window(u, n).compl()
    if isinstance(F, Dcc):
        return ray(u, "-", n) if "-" in u.ends else SymSet.empty(u)
    if isinstance(F, Acc):
        return ray(u, "+", n) if "+" in u.ends else SymSet.empty(u)
    if isinstance(F, Principal):
        return F.core()
    if isinstance(F, Meet):
        return _base_1d(F.left, n).union(_base_1d(F.right, n))
    if isinstance(F, Join):
        return _base_1d(F.left, n).inter(_base_1d(F.right, n))
    if isinstance(F, Star):
        return _base_1d(F.inner, n).star()
    if isinstance(F, Induced):
        return _base_1d(F.inner, n).inter(F.C)
    return cut_of(F).base(n)


def _box(u: ProductU, n: int) -> ProdSet:
    return ProdSet.rect(window(u.left, n), window(u.right, n))


def _base_prod(F: Filter, n: int) -> Optional[ProdSet]:
    u = F.universe
    if isinstance(F, All):
        return ProdSet.empty(u)
    if isinstance(F, Cof):
        return _box(u, n).compl()
    if isinstance(F, Principal):
        return F.core()
    if isinstance(F, (Meet, Join)):
        a, b = _base_prod(F.left, n), _base_prod(F.right, n)
        if a is None or b is None:
            return None
        return a.union(b) if isinstance(F, Meet) else a.inter(b)
    if isinstance(F, Tensor):
        B, A = base(F.fh, n), base(F.fg, n)
        return ProdSet.rect(B.compl(), A.compl()).compl()
    if isinstance(F, TimesProd):
        return ProdSet.rect(base(F.fh, n), base(F.fg, n))
    if isinstance(F, CofPair):
        B, A = base(F.fh, n), base(F.fg, n)
        H, G = u.left, u.right
        cover = ProdSet.rect(window(H, n), A.compl()).union(ProdSet.rect(B.compl(), window(G, n)))
        return cover.compl()
    return None


# ------------------------------------------------------------- membership


def member(F: Filter, X) -> Tri:
    """Is ``X`` in ``F``?  Yes/No answers are exact."""
    u = F.universe
    if X.universe != u:
        raise UniverseError(f"set over {X.universe.name}, filter over {u.name}")
    if not isinstance(u, ProductU):
        return cut_of(F).member(X)
    return _member_prod(F, X)


def member_def(F: Filter, X) -> Tri:
    """Membership by unfolding each node's definition over parametric bases,
    independent of the cut form."""
    u = F.universe
    if X.universe != u:
        raise UniverseError(f"set over {X.universe.name}, filter over {u.name}")
    if isinstance(u, ProductU):
        return _member_prod(F, X)
    return _member_def_1d(F, X)


def _member_def_1d(F: Filter, X: SymSet) -> Tri:
    n1, n2 = stabilization_params(F, X)
    if isinstance(F, All):
        return YES
    if isinstance(F, Cof):
        return tri(X.is_cofinite(), X.compl())
    if isinstance(F, Dcc):
        return tri(X.compl().has_dcc(), X.compl())
    if isinstance(F, Acc):
        return tri(X.compl().has_acc(), X.compl())
    if isinstance(F, Principal):
        return tri(F.core().subset_of(X), F.core().diff(X))
    if isinstance(F, Meet):
        return _member_def_1d(F.left, X) & _member_def_1d(F.right, X)
    if isinstance(F, Star):
        return _member_def_1d(F.inner, X.star())
    if isinstance(F, Induced):
        return _member_def_1d(F.inner, X.union(F.C.compl()))
    if isinstance(F, Join):
        return _exists(lambda n: _base_1d(F.left, n).inter(_base_1d(F.right, n)).subset_of(X), n1, n2)
    if isinstance(F, Perp):
        return _forall(lambda n: X.union(_base_1d(F.inner, n)).is_cofinite(), n1, n2)
    if isinstance(F, Quotient):
        return _forall_tri(lambda n: _member_def_1d(F.left, X.union(_base_1d(F.right, n))), n1, n2)
    return unknown(f"no definitional rule for {type(F).__name__}")


def _exists(pred, n1, n2) -> Tri:
    # bases decrease, so success at any parameter is a proof
    if pred(n1) or pred(n2):
        return YES
    return no(("parameter", n2))


def _forall(pred, n1, n2) -> Tri:
    # a failure at any parameter is a counterexample
    for n in (n1, n2):
        if not pred(n):
            return no(("parameter", n))
    return YES


def _forall_tri(fn, n1, n2) -> Tri:
    out = YES
    for n in (n1, n2):
        r = fn(n)
        if r.is_no:
            return no(("parameter", n))
        out = out & r
    return out


def _member_prod(F: Filter, X: ProdSet) -> Tri:
    u = F.universe
    n1, n2 = stabilization_params(F, X)
    if isinstance(F, All):
        return YES
    if isinstance(F, Cof):
        return tri(X.is_cofinite(), X.compl())
    if isinstance(F, Principal):
        return tri(F.core().subset_of(X), F.core().diff(X))
    if isinstance(F, Meet):
        return _member_prod(F.left, X) & _member_prod(F.right, X)
    if isinstance(F, Tensor):
        Xc = X.compl()
        return member(F.fh, Xc.project_h().compl()) & member(F.fg, Xc.project_g().compl())
    if isinstance(F, Angle):
        return _member_angle(F, X, n1, n2)
    if isinstance(F, Star):
        raise UniverseError("no involution is defined on a product universe")
    if isinstance(F, Perp):
        if isinstance(F.inner, Angle):
            return unknown("perp of an angle filter with unbalanced arguments has no base here")
        if _base_prod(F.inner, 0) is None:
            return unknown(f"no parametric base for {type(F.inner).__name__}")
        return _forall(lambda n: X.union(_base_prod(F.inner, n)).is_cofinite(), n1, n2)
    if isinstance(F, Quotient):
        if _base_prod(F.right, 0) is None:
            return unknown(f"no parametric base for {type(F.right).__name__}")
        return _forall_tri(lambda n: _member_prod(F.left, X.union(_base_prod(F.right, n))), n1, n2)
    b = _base_prod(F, 0)
    if b is None:
        return unknown(f"no parametric base for {type(F).__name__}")
    return _exists(lambda n: _base_prod(F, n).subset_of(X), n1, n2)


def _member_angle(F: Angle, X: ProdSet, n1, n2) -> Tri:
    u = F.universe
    H, G = u.left, u.right
    Xc = X.compl()
    pg = cut_of(Perp(F.fg))
    ph = cut_of(Perp(F.fh))
    out = YES
    for m in (n1, n2):
        A = pg.base(m)
        rows = Xc.inter(ProdSet.rect(SymSet.full(H), A.compl())).project_h().compl()
        ra = member(F.fh, rows)
        B = ph.base(m)
        cols = Xc.inter(ProdSet.rect(B.compl(), SymSet.full(G))).project_g().compl()
        rb = member(F.fg, cols)
        r = ra & rb
        if r.is_no:
            return no(("parameter", m))
        out = out & r
    return out


# ------------------------------------------------- normalizing constructors


def _canon(F: Filter) -> Filter:
    return F if F.is_product else from_cut(cut_of(F))


def all_(u) -> Filter:
    return All(u)


def cof(u) -> Filter:
    return Cof(u)


def dcc(u) -> Filter:
    return _canon(Dcc(u))


def acc(u) -> Filter:
    return _canon(Acc(u))


def principal(u, *bases) -> Filter:
    p = Principal(u, tuple(bases))
    return p if p.is_product else _canon(p)


def meet(F1: Filter, F2: Filter) -> Filter:
    return _canon(Meet(F1, F2))


def join(F1: Filter, F2: Filter) -> Filter:
    return _canon(Join(F1, F2))


def quotient(F1: Filter, F2: Filter) -> Filter:
    return _canon(Quotient(F1, F2))


def perp(F: Filter) -> Filter:
    if not F.is_product:
        return _canon(Perp(F))
    if isinstance(F, Cof):
        return All(F.universe)
    if isinstance(F, All):
        return Cof(F.universe)
    if isinstance(F, Perp) and isinstance(F.inner, Perp):
        return F.inner
    if isinstance(F, Perp) and _base_prod(F.inner, 0) is not None:
        # for a filter with a countable decreasing base, the double perp adds Cof
        return Join(F.inner, Cof(F.universe))
    return Perp(F)


def star(F: Filter) -> Filter:
    return _canon(Star(F))


def induced(F: Filter, C: SymSet) -> Filter:
    return _canon(Induced(F, C))


def _both_cof(fh, fg) -> bool:
    return cut_of(fh) == cut_of(Cof(fh.universe)) and cut_of(fg) == cut_of(Cof(fg.universe))


def tensor(fh: Filter, fg: Filter) -> Filter:
    fh, fg = _canon(fh), _canon(fg)
    if _both_cof(fh, fg):
        return Cof(ProductU(fh.universe, fg.universe))
    return Tensor(fh, fg)


def cof_pair(fh: Filter, fg: Filter) -> Filter:
    return CofPair(_canon(fh), _canon(fg))


def times_prod(fh: Filter, fg: Filter) -> Filter:
    return TimesProd(_canon(fh), _canon(fg))


def angle_pair(fh: Filter, fg: Filter) -> Filter:
    """Angle filter; for balanced arguments it is rewritten to
    ``perp(tensor(perp fh, perp fg))``."""
    fh, fg = _canon(fh), _canon(fg)
    if is_balanced(fh).is_yes and is_balanced(fg).is_yes:
        return Perp(tensor(perp(fh), perp(fg)))
    return Angle(fh, fg)


# ---------------------------------------------------------- predicates


def _sample_refute(F1, F2, samples) -> Optional[object]:
    for X in samples:
        a, b = member(F1, X), member(F2, X)
        if a.is_yes and b.is_no:
            return X
    return None


def filter_leq(F1: Filter, F2: Filter, samples=()) -> Tri:
    """``F1 ⊆ F2`` as families of sets."""
    if not F1.is_product:
        c1, c2 = cut_of(F1), cut_of(F2)
        if c1.leq(c2):
            return YES
        if not c2.core.subset_of(c1.core):
            return no(c1.core)
        return no(c1.base(c1.core.max_const() + 1))
    w = _sample_refute(F1, F2, samples)
    if w is not None:
        return no(w)
    return unknown("product filter comparison is only refuted by sampling")


def filter_eq(F1: Filter, F2: Filter, samples=()) -> Tri:
    if not F1.is_product:
        return tri(cut_of(F1) == cut_of(F2))
    if F1 == F2 or _normal_product(F1) == _normal_product(F2):
        return YES
    w = _sample_refute(F1, F2, samples) or _sample_refute(F2, F1, samples)
    if w is not None:
        return no(w)
    return unknown("no normal form and no sampled counterexample")


def _normal_product(F):
    if isinstance(F, Angle):
        return angle_pair(F.fh, F.fg)
    if isinstance(F, Tensor):
        return tensor(F.fh, F.fg)
    return F


def is_proper(F: Filter) -> Tri:
    if not F.is_product:
        c = cut_of(F)
        if c.core.is_empty() and not c.ends:
            return no(SymSet.empty(F.universe))
        return YES
    r = member(F, ProdSet.empty(F.universe))
    return ~r if r.decided else r


def is_balanced(F: Filter) -> Tri:
    if not F.is_product:
        c = cut_of(F)
        return tri(c.core.is_empty(), c.core)
    if isinstance(F, (All, Cof)):
        return YES
    return unknown("balancedness of product filters is not certified")


def is_self_adjoint(F: Filter) -> Tri:
    if F.is_product:
        raise UniverseError("no involution is defined on a product universe")
    return tri(cut_of(Star(Perp(F))) == cut_of(F))


__all__ = [
    "Tri", "YES", "NO", "unknown", "tri", "FilterError",
    "Filter", "All", "Cof", "Dcc", "Acc", "Principal", "Meet", "Join", "Quotient",
    "Perp", "Star", "Induced", "Tensor", "CofPair", "Angle", "TimesProd",
    "Cut", "cut_of", "from_cut", "base", "member", "member_def", "stabilization_params",
    "all_", "cof", "dcc", "acc", "principal", "meet", "join", "quotient", "perp", "star",
    "induced", "tensor", "cof_pair", "times_prod", "angle_pair",
    "filter_leq", "filter_eq", "is_proper", "is_balanced", "is_self_adjoint",
    "ray", "window",
]
