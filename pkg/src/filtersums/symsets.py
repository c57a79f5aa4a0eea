"""Index universes and exactly decidable symbolic subsets of them.

One-dimensional universes, infinite or finite, share one representation:
a sorted tuple of disjoint, non-adjacent integer intervals clipped to the
universe's domain.  Finite universes are ``{0, ..., n-1}``.

Subsets of a product universe are finite unions of *cells*.  A cell bounds
``h``, ``g``, ``s = h + g`` and ``d = g - h``; every bound is an integer or an
infinity sentinel.  Because all slopes are ±1, the projection of a cell to
either axis is an exact integer interval, so emptiness and finiteness are
decided by interval arithmetic alone.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import product as _iproduct
from typing import Iterable, Iterator, Optional, Sequence

INF = math.inf
NEG_INF = -math.inf


class UniverseError(ValueError):
    """Operation applied across different universes or to an unsupported one."""


class UnorderedUniverse(UniverseError):
    pass


def _fmt_bound(x) -> str:
    if x == INF:
        return "inf"
    if x == NEG_INF:
        return "-inf"
    return str(int(x))


def _ceil_half(x):
    return x if x in (INF, NEG_INF) else -((-x) // 2)


def _floor_half(x):
    return x if x in (INF, NEG_INF) else x // 2


# ---------------------------------------------------------------- universes


@dataclass(frozen=True)
class IntLine:
    """The integers with their natural order.

    ``involution="negate"`` models ``g -> g^-1`` in the additive group ℤ and
    reverses the order; ``"identity"`` leaves every point fixed.
    """

    involution: str = "negate"

    def __post_init__(self):
        if self.involution not in ("negate", "identity"):
            raise UniverseError(f"unknown involution {self.involution!r}")

    lo = NEG_INF
    hi = INF
    ends = ("-", "+")
    ordered = True

    def star(self, x: int) -> int:
        return -x if self.involution == "negate" else x

    def star_end(self, e: str) -> str:
        if self.involution == "negate":
            return "+" if e == "-" else "-"
        return e

    @property
    def name(self) -> str:
        return "Z" if self.involution == "negate" else "Zid"


@dataclass(frozen=True)
class IntHalfLine:
    """ℕ = {0, 1, 2, ...} with the identity involution."""

    lo = 0
    hi = INF
    ends = ("+",)
    ordered = True
    involution = "identity"

    def star(self, x: int) -> int:
        return x

    def star_end(self, e: str) -> str:
        return e

    @property
    def name(self) -> str:
        return "N"


@dataclass(frozen=True)
class FiniteU:
    """``{0, ..., size-1}``; ``perm`` is the involution as a tuple of images."""

    size: int
    perm: Optional[tuple] = None
    ordered: bool = True
    labels: Optional[tuple] = None

    def __post_init__(self):
        if self.size < 1:
            raise UniverseError("finite universe must be nonempty")
        if self.perm is not None:
            p = tuple(self.perm)
            if sorted(p) != list(range(self.size)) or any(p[p[i]] != i for i in range(self.size)):
                raise UniverseError(f"{p} is not a self-inverse permutation")
            object.__setattr__(self, "perm", p)

    lo = 0
    ends = ()

    @property
    def hi(self) -> int:
        return self.size - 1

    def star(self, x: int) -> int:
        return x if self.perm is None else self.perm[x]

    def star_end(self, e: str) -> str:
        return e

    @property
    def name(self) -> str:
        if self.perm is None:
            return f"F{self.size}"
        return f"F{self.size}:" + ",".join(map(str, self.perm))


@dataclass(frozen=True)
class ProductU:
    """Unordered index domain ``H × G`` of matrices and product filters."""

    left: object
    right: object

    @property
    def name(self) -> str:
        return f"{self.left.name}x{self.right.name}"


def rationals():
    """ℚ cannot serve as a ground universe: its well-ordered subsets are not
    finitely representable."""
    raise UniverseError("the rationals are not supported as a ground universe")


def _check_same(u, v):
    if u != v:
        raise UniverseError(f"universe mismatch: {u.name} vs {v.name}")


# ------------------------------------------------------------ 1-D subsets


def _normalize(intervals: Iterable[tuple], lo, hi) -> tuple:
    ivs = []
    for a, b in intervals:
        a = max(a, lo)
        b = min(b, hi)
        if a > b or a == INF or b == NEG_INF:
            continue
        ivs.append((a, b))
    ivs.sort()
    out: list = []
    for a, b in ivs:
        if out and a <= out[-1][1] + 1:
            if b > out[-1][1]:
                out[-1] = (out[-1][0], b)
        else:
            out.append((a, b))
    return tuple(out)


@dataclass(frozen=True)
class SymSet:
    """A subset of a one-dimensional universe in canonical interval form."""

    universe: object
    ivs: tuple = ()

    @classmethod
    def make(cls, universe, intervals: Iterable[tuple] = ()) -> SymSet:
        return cls(universe, _normalize(intervals, universe.lo, universe.hi))

    @classmethod
    def empty(cls, universe) -> SymSet:
        return cls(universe, ())

    @classmethod
    def full(cls, universe) -> SymSet:
        return cls.make(universe, [(universe.lo, universe.hi)])

    @classmethod
    def points_of(cls, universe, pts: Iterable[int]) -> SymSet:
        return cls.make(universe, [(p, p) for p in pts])

    @classmethod
    def interval(cls, universe, a=NEG_INF, b=INF) -> SymSet:
        return cls.make(universe, [(a, b)])

    # --- predicates
    def contains(self, x: int) -> bool:
        for a, b in self.ivs:
            if a <= x <= b:
                return True
            if x < a:
                return False
        return False

    __contains__ = contains

    def is_empty(self) -> bool:
        return not self.ivs

    def is_finite(self) -> bool:
        return all(a != NEG_INF and b != INF for a, b in self.ivs)

    def is_cofinite(self) -> bool:
        return self.compl().is_finite()

    def has_ray(self, end: str) -> bool:
        """Does the set contain a ray towards ``end`` ('-' or '+')?"""
        if not self.ivs or end not in self.universe.ends:
            return False
        if end == "-":
            return self.ivs[0][0] == NEG_INF
        return self.ivs[-1][1] == INF

    def germs(self) -> frozenset:
        return frozenset(e for e in self.universe.ends if self.has_ray(e))

    def bounded_below(self) -> bool:
        return not self.ivs or self.ivs[0][0] != NEG_INF

    def bounded_above(self) -> bool:
        return not self.ivs or self.ivs[-1][1] != INF

    def _require_order(self):
        if not getattr(self.universe, "ordered", False):
            raise UnorderedUniverse(f"{self.universe.name} carries no order")

    def has_dcc(self) -> bool:
        """Every strictly descending chain in the set is finite."""
        self._require_order()
        return self.bounded_below()

    def has_acc(self) -> bool:
        self._require_order()
        return self.bounded_above()

    # --- boolean algebra
    def _other(self, other: SymSet) -> SymSet:
        if not isinstance(other, SymSet):
            raise TypeError(f"expected SymSet, got {type(other).__name__}")
        _check_same(self.universe, other.universe)
        return other

    def union(self, other: SymSet) -> SymSet:
        other = self._other(other)
        return SymSet.make(self.universe, self.ivs + other.ivs)

    def compl(self) -> SymSet:
        u = self.universe
        out = []
        cur = u.lo
        for a, b in self.ivs:
            if a > cur:
                out.append((cur, a - 1))
            cur = b + 1
        if cur <= u.hi and cur != INF:
            out.append((cur, u.hi))
        return SymSet.make(u, out)

    def inter(self, other: SymSet) -> SymSet:
        other = self._other(other)
        out = []
        i = j = 0
        A, B = self.ivs, other.ivs
        while i < len(A) and j < len(B):
            a = max(A[i][0], B[j][0])
            b = min(A[i][1], B[j][1])
            if a <= b:
                out.append((a, b))
            if A[i][1] < B[j][1]:
                i += 1
            else:
                j += 1
        return SymSet.make(self.universe, out)

    def diff(self, other: SymSet) -> SymSet:
        return self.inter(self._other(other).compl())

    def subset_of(self, other: SymSet) -> bool:
        return self.diff(other).is_empty()

    __or__ = union
    __and__ = inter
    __sub__ = diff

    def __invert__(self):
        return self.compl()

    def __le__(self, other):
        return self.subset_of(other)

    def star(self) -> SymSet:
        u = self.universe
        if isinstance(u, FiniteU):
            if u.perm is None:
                return self
            return SymSet.points_of(u, (u.star(x) for x in self.points()))
        if u.involution == "identity":
            return self
        return SymSet.make(u, [(-b, -a) for a, b in self.ivs])

    def shift(self, k: int) -> SymSet:
        return SymSet.make(self.universe, [(a + k, b + k) for a, b in self.ivs])

    # --- enumeration
    def points(self) -> Iterator[int]:
        if not self.is_finite():
            raise ValueError("cannot enumerate an infinite set")
        for a, b in self.ivs:
            yield from range(int(a), int(b) + 1)

    def size(self) -> int:
        if not self.is_finite():
            raise ValueError("infinite set has no size")
        return sum(int(b) - int(a) + 1 for a, b in self.ivs)

    def min(self):
        return self.ivs[0][0] if self.ivs else None

    def max(self):
        return self.ivs[-1][1] if self.ivs else None

    def max_const(self) -> int:
        m = 0
        for a, b in self.ivs:
            for x in (a, b):
                if x not in (INF, NEG_INF):
                    m = max(m, abs(int(x)))
        return m

    def to_dsl(self) -> str:
        if not self.ivs:
            return "empty"
        parts = []
        for a, b in self.ivs:
            left = "(" if a == NEG_INF else "["
            right = ")" if b == INF else "]"
            parts.append(f"{left}{_fmt_bound(a)}..{_fmt_bound(b)}{right}")
        out = parts[0]
        for p in parts[1:]:
            out = f"union({out},{p})"
        return out

    def __repr__(self):
        return f"SymSet<{self.universe.name}>{self.to_dsl()}"


# -------------------------------------------------------------- 2-D cells


_CELL_FIELDS = ("hl", "hh", "gl", "gh", "sl", "sh", "dl", "dh")


@dataclass(frozen=True, order=True)
class Cell:
    """``{(h, g) : hl<=h<=hh, gl<=g<=gh, sl<=h+g<=sh, dl<=g-h<=dh}``."""

    hl: object = NEG_INF
    hh: object = INF
    gl: object = NEG_INF
    gh: object = INF
    sl: object = NEG_INF
    sh: object = INF
    dl: object = NEG_INF
    dh: object = INF

    def bounds(self) -> tuple:
        return tuple(getattr(self, f) for f in _CELL_FIELDS)

    def contains(self, h: int, g: int) -> bool:
        return (self.hl <= h <= self.hh and self.gl <= g <= self.gh
                and self.sl <= h + g <= self.sh and self.dl <= g - h <= self.dh)

    def proj_h(self) -> Optional[tuple]:
        hl, hh, gl, gh, sl, sh, dl, dh = self.bounds()
        if gl > gh or sl > sh or dl > dh or hl > hh:
            return None
        lo = max(hl, gl - dh, sl - gh, _ceil_half(sl - dh))
        hi = min(hh, sh - gl, gh - dl, _floor_half(sh - dl))
        return (lo, hi) if lo <= hi else None

    def transpose(self) -> Cell:
        return Cell(self.gl, self.gh, self.hl, self.hh, self.sl, self.sh, -self.dh, -self.dl)

    def proj_g(self) -> Optional[tuple]:
        return self.transpose().proj_h()

    def is_empty(self) -> bool:
        return self.proj_h() is None

    def g_range(self, h: int) -> tuple:
        return (max(self.gl, self.sl - h, self.dl + h), min(self.gh, self.sh - h, self.dh + h))

    def is_finite(self) -> bool:
        ph, pg = self.proj_h(), self.proj_g()
        if ph is None:
            return True
        return INF not in (abs(ph[0]), abs(ph[1]), abs(pg[0]), abs(pg[1]))

    def tighten(self) -> Optional[Cell]:
        c = self
        for _ in range(2):
            ph, pg = c.proj_h(), c.proj_g()
            if ph is None or pg is None:
                return None
            hl, hh = ph
            gl, gh = pg
            c = Cell(hl, hh, gl, gh,
                     max(c.sl, hl + gl), min(c.sh, hh + gh),
                     max(c.dl, gl - hh), min(c.dh, gh - hl))
        return c

    def inter(self, other: Cell) -> Cell:
        a, b = self.bounds(), other.bounds()
        return Cell(*(max(a[i], b[i]) if i % 2 == 0 else min(a[i], b[i]) for i in range(8)))

    def within(self, other: Cell) -> bool:
        """Sufficient (bound-wise) test for ``self ⊆ other``."""
        a, b = self.bounds(), other.bounds()
        return all(a[i] >= b[i] if i % 2 == 0 else a[i] <= b[i] for i in range(8))

    def complement_pieces(self, box: Cell) -> list:
        """Disjoint cells covering ``box`` minus ``self``."""
        pieces = []
        prefix = box
        b = self.bounds()
        for i in range(0, 8, 2):
            lo, hi = b[i], b[i + 1]
            if lo != NEG_INF:
                pieces.append(prefix.inter(_bound_cell(i + 1, lo - 1)))
                prefix = prefix.inter(_bound_cell(i, lo))
            if hi != INF:
                pieces.append(prefix.inter(_bound_cell(i, hi + 1)))
                prefix = prefix.inter(_bound_cell(i + 1, hi))
        return pieces

    def points(self) -> Iterator[tuple]:
        ph = self.proj_h()
        if ph is None:
            return
        if not self.is_finite():
            raise ValueError("cannot enumerate an infinite cell")
        for h in range(int(ph[0]), int(ph[1]) + 1):
            lo, hi = self.g_range(h)
            for g in range(int(lo), int(hi) + 1):
                yield (h, g)

    def max_const(self) -> int:
        return max([abs(int(x)) for x in self.bounds() if x not in (INF, NEG_INF)] or [0])

    def to_dsl(self) -> str:
        parts = []
        for name, i in (("h", 0), ("g", 2), ("s", 4), ("d", 6)):
            lo, hi = self.bounds()[i], self.bounds()[i + 1]
            if lo == NEG_INF and hi == INF:
                continue
            left = "(" if lo == NEG_INF else "["
            right = ")" if hi == INF else "]"
            parts.append(f"{name}:{left}{_fmt_bound(lo)}..{_fmt_bound(hi)}{right}")
        return "cell{" + ",".join(parts) + "}"


def _bound_cell(index: int, value) -> Cell:
    vals = [NEG_INF, INF] * 4
    vals[index] = value
    return Cell(*vals)


def _box(u: ProductU) -> Cell:
    return Cell(u.left.lo, u.left.hi, u.right.lo, u.right.hi)


def _reduce_cells(cells: Iterable[Cell]) -> tuple:
    tight = []
    seen = set()
    for c in cells:
        t = c.tighten()
        if t is not None and t not in seen:
            seen.add(t)
            tight.append(t)
    keep = []
    for i, c in enumerate(tight):
        if any(j != i and c.within(o) and (not o.within(c) or j < i) for j, o in enumerate(tight)):
            continue
        keep.append(c)
    return tuple(sorted(keep))


# ------------------------------------------------------------ 2-D subsets


@dataclass(frozen=True)
class ProdSet:
    """A finite union of cells inside a product universe."""

    universe: ProductU
    cells: tuple = field(default=())

    @classmethod
    def make(cls, universe: ProductU, cells: Iterable[Cell] = ()) -> ProdSet:
        box = _box(universe)
        return cls(universe, _reduce_cells(c.inter(box) for c in cells))

    @classmethod
    def empty(cls, universe) -> ProdSet:
        return cls(universe, ())

    @classmethod
    def full(cls, universe) -> ProdSet:
        return cls.make(universe, [Cell()])

    @classmethod
    def points_of(cls, universe, pts: Iterable[tuple]) -> ProdSet:
        return cls.make(universe, [Cell(h, h, g, g) for h, g in pts])

    @classmethod
    def rect(cls, B: SymSet, A: SymSet) -> ProdSet:
        """``B × A``."""
        u = ProductU(B.universe, A.universe)
        return cls.make(u, [Cell(b0, b1, a0, a1) for (b0, b1), (a0, a1) in _iproduct(B.ivs, A.ivs)])

    @classmethod
    def stripe(cls, universe: ProductU, key: str, S: SymSet) -> ProdSet:
        """Points whose ``key`` coordinate (``s = h+g`` or ``d = g-h``) lies in ``S``."""
        if key == "s":
            cells = [Cell(sl=a, sh=b) for a, b in S.ivs]
        elif key == "d":
            cells = [Cell(dl=a, dh=b) for a, b in S.ivs]
        else:
            raise ValueError("stripe key must be 's' or 'd'")
        return cls.make(universe, cells)

    def _other(self, other) -> ProdSet:
        if not isinstance(other, ProdSet):
            raise TypeError(f"expected ProdSet, got {type(other).__name__}")
        _check_same(self.universe, other.universe)
        return other

    def contains(self, h: int, g: int) -> bool:
        return any(c.contains(h, g) for c in self.cells)

    def __contains__(self, pt):
        return self.contains(*pt)

    def is_empty(self) -> bool:
        return not self.cells

    def is_finite(self) -> bool:
        return all(c.is_finite() for c in self.cells)

    def is_cofinite(self) -> bool:
        return self.compl().is_finite()

    def union(self, other) -> ProdSet:
        other = self._other(other)
        return ProdSet(self.universe, _reduce_cells(self.cells + other.cells))

    def inter(self, other) -> ProdSet:
        other = self._other(other)
        return ProdSet(self.universe, _reduce_cells(a.inter(b) for a in self.cells for b in other.cells))

    def compl(self) -> ProdSet:
        box = _box(self.universe)
        result: tuple = (box,)
        for c in self.cells:
            pieces = c.complement_pieces(box)
            result = _reduce_cells(r.inter(p) for r in result for p in pieces)
            if not result:
                break
        return ProdSet(self.universe, _reduce_cells(result))

    def diff(self, other) -> ProdSet:
        return self.inter(self._other(other).compl())

    def subset_of(self, other) -> bool:
        return self.diff(other).is_empty()

    def equivalent(self, other) -> bool:
        return self.subset_of(other) and other.subset_of(self)

    __or__ = union
    __and__ = inter
    __sub__ = diff

    def __invert__(self):
        return self.compl()

    def project_h(self) -> SymSet:
        return SymSet.make(self.universe.left, [p for p in (c.proj_h() for c in self.cells) if p])

    def project_g(self) -> SymSet:
        return SymSet.make(self.universe.right, [p for p in (c.proj_g() for c in self.cells) if p])

    def section_at_h(self, h: int) -> SymSet:
        """``{g : (h, g) in X}``."""
        return SymSet.make(self.universe.right, [c.g_range(h) for c in self.cells if c.hl <= h <= c.hh])

    def section_at_g(self, g: int) -> SymSet:
        out = []
        for c in self.cells:
            if c.gl <= g <= c.gh:
                t = c.transpose()
                out.append(t.g_range(g))
        return SymSet.make(self.universe.left, out)

    def points(self) -> Iterator[tuple]:
        seen = set()
        for c in self.cells:
            for p in c.points():
                if p not in seen:
                    seen.add(p)
                    yield p

    def size(self) -> int:
        return sum(1 for _ in self.points())

    def max_const(self) -> int:
        return max([c.max_const() for c in self.cells] or [0])

    def to_dsl(self) -> str:
        if not self.cells:
            return "empty2"
        out = self.cells[0].to_dsl()
        for c in self.cells[1:]:
            out = f"union({out},{c.to_dsl()})"
        return out

    def __repr__(self):
        return f"ProdSet<{self.universe.name}>{self.to_dsl()}"


def project_h(X: ProdSet) -> SymSet:
    return X.project_h()


def project_g(X: ProdSet) -> SymSet:
    return X.project_g()


def max_const(*objs: Sequence) -> int:
    m = 0
    for o in objs:
        if o is not None:
            m = max(m, o.max_const())
    return m
