"""Markov bases of no-3-way interaction models and the slim-table walks.

The 2x2x2 model needs a single quartic.  The 2x3x3 model has an
indispensable sextic that no splitting set can break up.
"""

from hypertoric import (
    binomial_of,
    find_splitting_sets,
    is_indispensable,
    markov_basis,
    no_three_way,
    printed_walk_233,
    slim_table_walk,
)

h = no_three_way(2, 2, 2)
mb = markov_basis(h, 6)
print("2x2x2 generators:")
for f in mb:
    print("  ", f.format(h))

w = printed_walk_233()
search = find_splitting_sets(w, size_cap=None, mult_cap=None)
print("\n2x3x3 walk:", w.describe())
print("  indispensable:", is_indispensable(w.host, binomial_of(w)))
print("  splitting sets found with no caps:", len(search.found))

print("\nslim tables 2 x r x c:")
for r in range(2, 5):
    for c in range(r, 5):
        w = slim_table_walk(r, c)
        ok = is_indispensable(w.host, binomial_of(w))
        print(f"  r={r} c={c} degree={w.blue.size} indispensable={ok}")
