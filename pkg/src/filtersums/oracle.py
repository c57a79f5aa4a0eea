"""Windowed brute-force oracle.

Everything here works from point predicates inside ``[-W, W]`` (or
``[-W, W]^2``): a set is judged finite when its outer shell ``W/2 < |x| <= W``
is empty, and it contains a ray at an end when the shell towards that end is
full.  Filter membership unfolds the textbook definitions with base
parameter ``n = W/4``.  The oracle only answers when every constant in the
query sits well inside the window; otherwise it returns ``None``.
"""

from __future__ import annotations

from itertools import product as _iproduct
from typing import Callable, Optional

from . import filters as fl
from .symsets import FiniteU, ProductU, ProdSet, SymSet

Pred = Callable[[int], bool]

DEFAULT_WINDOW = 32


class NotApplicable(Exception):
    pass


def _points(u, W):
    lo = max(-W, u.lo)
    hi = min(W, u.hi)
    return range(int(lo), int(hi) + 1)


def _shell(u, W, end):
    if end == "+":
        return [x for x in _points(u, W) if x > W // 2]
    return [x for x in _points(u, W) if x < -(W // 2)]


def _finite(u, p: Pred, W) -> bool:
    if isinstance(u, FiniteU):
        return True
    return not any(p(x) for e in u.ends for x in _shell(u, W, e))


def _cofinite(u, p: Pred, W) -> bool:
    return _finite(u, lambda x: not p(x), W)


def _ray(u, p: Pred, W, end) -> bool:
    if end not in u.ends:
        return False
    return all(p(x) for x in _shell(u, W, end))


def _base_pred(F, n: int) -> Pred:
    u = F.universe
    if isinstance(F, fl.All):
        return lambda x: False
    if isinstance(F, fl.Cof):
        return lambda x: abs(x) > n if not isinstance(u, FiniteU) else False
    if isinstance(F, fl.Dcc):
        return (lambda x: x <= -n) if "-" in u.ends else (lambda x: False)
    if isinstance(F, fl.Acc):
        return (lambda x: x >= n) if "+" in u.ends else (lambda x: False)
    if isinstance(F, fl.Principal):
        bs = F.bases
        return lambda x: all(b.contains(x) for b in bs)
    if isinstance(F, fl.Meet):
        a, b = _base_pred(F.left, n), _base_pred(F.right, n)
        return lambda x: a(x) or b(x)
    if isinstance(F, fl.Join):
        a, b = _base_pred(F.left, n), _base_pred(F.right, n)
        return lambda x: a(x) and b(x)
    if isinstance(F, fl.Star):
        a = _base_pred(F.inner, n)
        return lambda x: a(u.star(x))
    if isinstance(F, fl.Perp):
        # bases of the perps of the atoms, by their defining property
        inner = F.inner
        if isinstance(inner, fl.Cof):
            return lambda x: False
        if isinstance(inner, fl.All):
            return _base_pred(fl.Cof(u), n)
    raise NotApplicable(type(F).__name__)


def member_1d(F, p: Pred, W: int, n: Optional[int] = None) -> bool:
    u = F.universe
    n = W // 4 if n is None else n
    pts = _points(u, W)
    if isinstance(F, fl.All):
        return True
    if isinstance(F, fl.Cof):
        return _cofinite(u, p, W)
    if isinstance(F, fl.Dcc):
        # complement bounded below
        return "-" not in u.ends or _ray(u, p, W, "-")
    if isinstance(F, fl.Acc):
        return "+" not in u.ends or _ray(u, p, W, "+")
    if isinstance(F, fl.Principal):
        return all(p(x) for x in pts if all(b.contains(x) for b in F.bases))
    if isinstance(F, fl.Meet):
        return member_1d(F.left, p, W, n) and member_1d(F.right, p, W, n)
    if isinstance(F, fl.Join):
        b = _base_pred(F, n)
        return all(p(x) for x in pts if b(x))
    if isinstance(F, fl.Star):
        return member_1d(F.inner, lambda x: p(u.star(x)), W, n)
    if isinstance(F, fl.Perp):
        b = _base_pred(F.inner, n)
        return _cofinite(u, lambda x: p(x) or b(x), W)
    if isinstance(F, fl.Quotient):
        b = _base_pred(F.right, n)
        # the base of F.left has to sit deeper than the one of F.right
        return member_1d(F.left, lambda x: p(x) or b(x), W, 2 * n)
    if isinstance(F, fl.Induced):
        C = F.C
        return member_1d(F.inner, lambda x: p(x) or not C.contains(x), W, n)
    raise NotApplicable(type(F).__name__)


# ----------------------------------------------------------------- products


def _pts2(u: ProductU, W):
    return _iproduct(_points(u.left, W), _points(u.right, W))


def _cofinite2(u: ProductU, p, W) -> bool:
    half = W // 2
    for h, g in _pts2(u, W):
        if max(abs(h), abs(g)) > half and not p(h, g):
            return False
    return True


def _perp_base_pred(F, n) -> Pred:
    """Base of the perp of a one-dimensional atom, from the atom's base."""
    u = F.universe
    if isinstance(F, fl.All):
        return _base_pred(fl.Cof(u), n)
    if isinstance(F, fl.Cof):
        return lambda x: False
    if isinstance(F, fl.Dcc):
        return (lambda x: x >= n) if "+" in u.ends else (lambda x: False)
    if isinstance(F, fl.Acc):
        return (lambda x: x <= -n) if "-" in u.ends else (lambda x: False)
    raise NotApplicable("perp base of " + type(F).__name__)


def _prod_base_pred(F, n):
    u = F.universe
    if isinstance(F, fl.All):
        return lambda h, g: False
    if isinstance(F, fl.Cof):
        return lambda h, g: max(abs(h), abs(g)) > n
    if isinstance(F, fl.Tensor):
        B, A = _base_pred(F.fh, n), _base_pred(F.fg, n)
        return lambda h, g: B(h) or A(g)
    if isinstance(F, fl.TimesProd):
        B, A = _base_pred(F.fh, n), _base_pred(F.fg, n)
        return lambda h, g: B(h) and A(g)
    if isinstance(F, fl.CofPair):
        B, A = _base_pred(F.fh, n), _base_pred(F.fg, n)
        return lambda h, g: not ((abs(h) <= n and not A(g)) or (not B(h) and abs(g) <= n))
    raise NotApplicable(type(F).__name__)


def member_prod(F, p, W: int) -> bool:
    u = F.universe
    n = W // 4
    reach = 2 * W  # range of the inner quantifiers
    if isinstance(F, fl.All):
        return True
    if isinstance(F, fl.Cof):
        return _cofinite2(u, p, W)
    if isinstance(F, fl.Meet):
        return member_prod(F.left, p, W) and member_prod(F.right, p, W)
    if isinstance(F, fl.Tensor):
        H, G = u.left, u.right
        gs, hs = list(_points(G, reach)), list(_points(H, reach))
        rows = lambda h: all(p(h, g) for g in gs)
        cols = lambda g: all(p(h, g) for h in hs)
        return member_1d(F.fh, rows, W) and member_1d(F.fg, cols, W)
    if isinstance(F, fl.Angle):
        H, G = u.left, u.right
        gs, hs = list(_points(G, reach)), list(_points(H, reach))
        A = _perp_base_pred(F.fg, n)
        B = _perp_base_pred(F.fh, n)
        rows = lambda h: all(p(h, t) for t in gs if not A(t))
        cols = lambda g: all(p(s, g) for s in hs if not B(s))
        return member_1d(F.fh, rows, W) and member_1d(F.fg, cols, W)
    if isinstance(F, fl.Perp):
        b = _prod_base_pred(F.inner, n)
        return _cofinite2(u, lambda h, g: p(h, g) or b(h, g), W)
    b = _prod_base_pred(F, n)
    return all(p(h, g) for h, g in _pts2(u, W) if b(h, g))


# ----------------------------------------------------------------- entry

def applicable(F, X, W: int = DEFAULT_WINDOW) -> bool:
    limit = W // 8
    if isinstance(F.universe, ProductU):
        limit = W // 8
    return max(F.max_const(), X.max_const()) <= limit


def member(F, X, W: int = DEFAULT_WINDOW) -> Optional[bool]:
    """Oracle verdict, or ``None`` when the oracle does not apply."""
    if not applicable(F, X, W):
        return None
    try:
        if isinstance(X, ProdSet):
            return member_prod(F, X.contains, W)
        return member_1d(F, X.contains, W)
    except NotApplicable:
        return None


def finite(X, W: int = DEFAULT_WINDOW) -> bool:
    if isinstance(X, ProdSet):
        return _cofinite2(X.universe, lambda h, g: not X.contains(h, g), W)
    return _finite(X.universe, X.contains, W)


def has_ray(X: SymSet, end: str, W: int = DEFAULT_WINDOW) -> bool:
    return _ray(X.universe, X.contains, W, end)


def pairing(f, h, W: int = DEFAULT_WINDOW):
    u = f.universe
    return sum((f.at(x) * h.at(u.star(x)) for x in _points(u, W)), 0)


def mat_vec_entry(entry, a, h: int, W: int = DEFAULT_WINDOW):
    """``sum_t entry(h, t*) a(t)`` over the window."""
    G = a.universe
    return sum((entry(h, G.star(t)) * a.at(t) for t in _points(G, W)), 0)


def vec_mat_entry(gamma, entry, g: int, W: int = DEFAULT_WINDOW):
    H = gamma.universe
    return sum((gamma.at(H.star(h)) * entry(h, g) for h in _points(H, W)), 0)
