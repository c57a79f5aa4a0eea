"""Deterministic sample generators for property suites.

Every generator takes a :class:`random.Random`; :func:`make_rng` builds one
from a CLI seed.  One-dimensional constants stay within ``±8`` and product
constants within ``±4`` so that the window oracle applies.
"""

from __future__ import annotations

import random
from fractions import Fraction

from . import filters as fl
from .coefficients import Quaternion
from .symsets import INF, NEG_INF, Cell, IntLine, ProdSet, ProductU, SymSet
from .sums import FormalSum, Pattern

DEFAULT_SEED = "0xF1L7ER"


def parse_seed(seed):
    """Hex strings become integers; anything else seeds by its text."""
    if isinstance(seed, int):
        return seed
    text = str(seed)
    try:
        return int(text, 16)
    except ValueError:
        return text


def make_rng(seed=DEFAULT_SEED) -> random.Random:
    return random.Random(parse_seed(seed))


def symset(r: random.Random, u, C: int = 8) -> SymSet:
    lo = max(-C, u.lo)
    hi = min(C, u.hi)
    kind = r.choice(["ray", "interval", "points", "mix", "empty", "full"])
    if kind == "empty":
        return SymSet.empty(u)
    if kind == "full":
        return SymSet.full(u)
    ivs = []
    count = {"ray": 1, "interval": 1, "points": 0, "mix": r.randint(1, 3)}[kind]
    for _ in range(count):
        a = r.randint(lo, hi)
        b = r.randint(a, hi)
        if kind == "ray" or (kind == "mix" and r.random() < 0.5):
            if r.random() < 0.5:
                a = NEG_INF
            else:
                b = INF
        ivs.append((a, b))
    if kind in ("points", "mix"):
        ivs += [(x, x) for x in r.sample(range(lo, hi + 1), r.randint(1, 3))]
    X = SymSet.make(u, ivs)
    twist = r.random()
    if twist < 0.2:
        X = X.compl()
    elif twist < 0.35:
        X = X.star()
    return X


def _bound_pair(r, C):
    a = r.choice([NEG_INF, r.randint(-C, C)])
    b = r.choice([INF, r.randint(-C, C)])
    if a != NEG_INF and b != INF and a > b:
        a, b = b, a
    return a, b


def cell(r: random.Random, C: int = 4) -> Cell:
    kind = r.choice(["rect", "stripe_s", "stripe_d", "point", "wedge"])
    if kind == "point":
        h, g = r.randint(-C, C), r.randint(-C, C)
        return Cell(h, h, g, g)
    if kind == "rect":
        return Cell(*_bound_pair(r, C), *_bound_pair(r, C))
    if kind == "stripe_s":
        a = r.randint(-C, C)
        return Cell(sl=a, sh=a + r.randint(0, 2))
    if kind == "stripe_d":
        a = r.randint(-C, C)
        return Cell(dl=a, dh=a + r.randint(0, 2))
    hl, hh = _bound_pair(r, C)
    sl, sh = _bound_pair(r, C)
    return Cell(hl, hh, sl=sl, sh=sh)


def prodset(r: random.Random, U: ProductU, C: int = 4) -> ProdSet:
    X = ProdSet.make(U, [cell(r, C) for _ in range(r.randint(0, 3))])
    if r.random() < 0.4:
        X = X.compl()
    return X


def atom(r: random.Random, u, C: int = 8) -> fl.Filter:
    kind = r.choice(["all", "cof", "dcc", "acc", "principal"] if u.ordered else ["all", "cof", "principal"])
    if kind == "principal":
        return fl.Principal(u, (symset(r, u, C),))
    return {"all": fl.All, "cof": fl.Cof, "dcc": fl.Dcc, "acc": fl.Acc}[kind](u)


def balanced_atom(r: random.Random, u) -> fl.Filter:
    return r.choice([fl.All, fl.Cof, fl.Dcc, fl.Acc])(u)


def filter_ast(r: random.Random, u, depth: int = 3, C: int = 8) -> fl.Filter:
    if depth <= 0 or r.random() < 0.3:
        return atom(r, u, C)
    kind = r.choice(["meet", "join", "quot", "perp", "star", "induced"])
    if kind in ("meet", "join", "quot"):
        cls = {"meet": fl.Meet, "join": fl.Join, "quot": fl.Quotient}[kind]
        return cls(filter_ast(r, u, depth - 1, C), filter_ast(r, u, depth - 1, C))
    if kind == "perp":
        return fl.Perp(filter_ast(r, u, depth - 1, C))
    if kind == "star":
        return fl.Star(filter_ast(r, u, depth - 1, C))
    return fl.Induced(filter_ast(r, u, depth - 1, C), symset(r, u, C))


def scalar(r: random.Random, quaternion: bool = False, nonzero: bool = False):
    vals = [Fraction(-2), Fraction(-1), Fraction(1), Fraction(2), Fraction(1, 2), Fraction(-3, 2)]
    if not nonzero:
        vals.append(Fraction(0))
    if quaternion:
        while True:
            q = Quaternion(*(r.choice(vals + [Fraction(0)]) for _ in range(4)))
            if not nonzero or q != 0:
                return q
    return r.choice(vals)


def formal_sum(r: random.Random, u, C: int = 8, rays=True, quaternion=False, side="column") -> FormalSum:
    lo = max(-C, u.lo)
    hi = min(C, u.hi)
    span = range(int(lo), int(hi) + 1)
    fin = {x: scalar(r, quaternion) for x in r.sample(span, r.randint(0, min(4, len(span))))}
    low = high = None

    def pat():
        p = r.choice([1, 1, 2, 3])
        return Pattern(p, tuple(scalar(r, quaternion, nonzero=True) for _ in range(p)))

    if rays and "+" in u.ends and r.random() < 0.5:
        high = (hi + 1, pat())
    if rays and "-" in u.ends and r.random() < 0.4:
        low = (lo - 1, pat())
    return FormalSum.build(u, fin, low, high, side)


def finite_sum(r: random.Random, u, C: int = 8, quaternion=False, side="column") -> FormalSum:
    return formal_sum(r, u, C, rays=False, quaternion=quaternion, side=side)


def matrix(r: random.Random, H, G, C: int = 4, kind=None):
    """A random Explicit, Finitary or convolution matrix over ``H × G``."""
    from . import operators as op

    kind = kind or r.choice(["explicit", "finitary", "conv", "conv"])
    if kind == "explicit":
        def pick(u):
            return r.randint(max(-C, u.lo), min(C, u.hi))

        ents = {(pick(H), pick(G)): scalar(r, nonzero=True) for _ in range(r.randint(0, 4))}
        return op.explicit(H, G, ents)
    if kind == "finitary":
        terms = [(formal_sum(r, H, C, side="column"), formal_sum(r, G, C, side="row")) for _ in range(r.randint(1, 2))]
        return op.finitary(terms)
    kernel = formal_sum(r, IntLine(), C)
    return op.conv(H, G, kernel, r.choice("sd"))
