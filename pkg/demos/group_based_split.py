"""Splitting a degree-6 walk of the 16-edge group-based hypergraph.

Adding the two edges e133 and e212 to both colors gives a balanced set that
falls apart into two cubic walks, so the sextic is a combination of cubics.
"""

from hypertoric import find_splitting_sets, group_based_walk, rewrite_with_decomposition
from hypertoric.balanced import format_monomial
from hypertoric.splitting import expand, walk_polynomial

w = group_based_walk()
h = w.host
print("walk:", w.describe())

search = find_splitting_sets(w)
s, d = search.proper()[0]
print("first proper splitting set:", [h.edge_name(j) for j in s.elements()])
print("  gamma1:", d.gamma1.describe())
print("  gamma2:", d.gamma2.describe())

rw = rewrite_with_decomposition(w, d)
print(f"\nf_W = {format_monomial(rw.m1, h)} * ({rw.f1.format(h)})")
print(f"    + {format_monomial(rw.m2, h)} * ({rw.f2.format(h)})")
print("identity expands correctly:", expand(rw.terms()) == walk_polynomial(w))
