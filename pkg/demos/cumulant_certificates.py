"""Certificates that cumulant walks reduce to lower degree.

Builds a few primitive walks on the truncated cumulant hypergraph of five
vertices (all 2- and 3-subsets), certifies each one, and checks the JSON
round trip through the verifier.
"""

import itertools

from hypertoric import BalancedEdgeSet, Multiset, cumulant_hypergraph, is_primitive
from hypertoric.balanced import image
from hypertoric.families import cumulant_split_certificate
from hypertoric.serialize import certificate_to_json, verify_certificate
from hypertoric.splitting import check_nonuniform_conditions
from hypertoric.toric import iter_fiber

h = cumulant_hypergraph(5, full=False)
twos = [j for j, e in enumerate(h.edges) if len(e) == 2]
first = h.edge_index((0, 1, 2))

shown = 0
for combo in itertools.combinations(twos, 3):
    u = [0] * h.n_edges
    u[first] = 1
    for j in combo:
        u[j] += 1
    for v in iter_fiber(h, image(h, u), 4):
        if any(a and b for a, b in zip(u, v)) or sum(v[j] for j in twos) != 3:
            continue
        w = BalancedEdgeSet(Multiset.from_vector(u), Multiset.from_vector(v), h)
        if not is_primitive(w):
            continue
        d = cumulant_split_certificate(w)
        print("walk:", w.describe())
        print("  separator:", [h.edge_name(j) for j in d.separator.elements()])
        print("  pieces of degree", d.gamma1.blue.size, "and", d.gamma2.blue.size)
        wit = check_nonuniform_conditions(w)
        doc = certificate_to_json(wit, walk=w)
        print("  generic witness:", doc["kind"], "->", verify_certificate(doc).status)
        shown += 1
        break
    if shown == 4:
        break
