"""Laurent series as columns over ℤ.

A column whose support is bounded below is a Laurent series in t: the
entry at index i is the coefficient of t^i.  Convolution matrices with key
``s`` act on such columns by multiplication, and they are continuous for
the d.c.c. filter, so they can be multiplied in the ring of continuous
matrices.  Here 1 - t is inverted by the geometric series.
"""

from filtersums import filters as fl
from filtersums import operators as op
from filtersums import sums as sm
from filtersums.interp import show
from filtersums.symsets import IntLine, SymSet

Z = IntLine()
D = fl.dcc(Z)

# 1 - t and 1 + t + t^2 + ...
one_minus_t = op.conv(Z, Z, sm.fsum(Z, {0: 1, 1: -1}), "s")
geometric = sm.char_fn(SymSet.interval(Z, 0))
print("geometric column:", show(geometric))
print("in FU(dcc)?      ", sm.in_space(geometric, D))
print("in FU(cof)?      ", sm.in_space(geometric, fl.cof(Z)))

# continuity is membership of the zero set in an angle filter
print("1 - t continuous?", op.is_continuous_left(one_minus_t, D, D))
print("  condition m1:  ", op.check_m1(one_minus_t, D, D))
print("  condition m2:  ", op.check_m2(one_minus_t, D, D))

# (1 - t) * sum t^i = 1
print("(1 - t) applied to the geometric column:", show(op.mat_vec(one_minus_t, geometric)))

# the same identity one level up, as matrices
G = op.conv(Z, Z, geometric, "s")
product = op.ring_mul(one_minus_t, G, D)
print("ring product:", show(product), "== E ?", product == op.identity(Z))

# partial sums of the geometric family converge t-adically
family = sm.PatternedFamily(SymSet.interval(Z, 0), geometric)
print("dcc-summable?", sm.is_summable(family, D), " tails converge?", sm.tail_converges(family, D))
print("cof-summable?", sm.is_summable(family, fl.cof(Z)))
