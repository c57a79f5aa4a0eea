"""A short tour of the filter algebra on ℤ and ℤ×ℤ."""

from filtersums import filters as fl
from filtersums.interp import show
from filtersums.symsets import Cell, IntLine, ProdSet, ProductU, SymSet

Z = IntLine()
D, A, C = fl.dcc(Z), fl.acc(Z), fl.cof(Z)
upper = SymSet.interval(Z, 5)
lower = SymSet.interval(Z, b=0)

print("[5..inf) in dcc?", fl.member(D, upper), "  in acc?", fl.member(A, upper))
print("(-inf..0] in dcc?", fl.member(D, lower))

# perp is computed from the cut form and normalized
print("perp(dcc) =", show(fl.perp(D)), "  perp(cof) =", show(fl.perp(C)))
print("dcc balanced?", fl.is_balanced(D), "  self-adjoint?", fl.is_self_adjoint(D))

# cof : dcc is by definition the perp of dcc
q = fl.quotient(C, D)
print("cof : dcc  =", show(q), "  contains [3..inf)?", fl.member(q, SymSet.interval(Z, 3)))

# product filters: the angle of two balanced filters is a perp of a tensor
ZZ = ProductU(Z, Z)
print("angle(dcc, acc) ->", show(fl.angle_pair(D, A)))
anti_diagonal = ProdSet.stripe(ZZ, "s", SymSet.make(Z, [(0, 0)]))
print("anti-diagonal finite?", anti_diagonal.is_finite(), " cofinite?", anti_diagonal.is_cofinite())
box = ProdSet.make(ZZ, [Cell(-3, 3, -3, 3)])
print("complement of a box in cof (x) cof?", fl.member(fl.tensor(C, C), box.compl()))
