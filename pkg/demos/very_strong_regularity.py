"""Very strongly regular signed graphs found by exhaustive search on six vertices."""
from collections import Counter

from sgmatrix import check_srg_equivalence, check_vsr
from sgmatrix.corpus import atlas_graphs, all_signatures
from sgmatrix.named import cycle_graph, petersen_graph
from sgmatrix.vsr import check_case_invariants

for sign in (1, -1):
    p = check_vsr(cycle_graph(5).with_sign(sign))
    print(f"{'+' if sign > 0 else '-'}C5: (t, k, p, rho0) = {p.as_tuple()} case {p.case_tag}")

print("Petersen:", check_srg_equivalence(petersen_graph()).data)

tags = Counter()
for gamma in atlas_graphs(6):
    for g in all_signatures(gamma):
        p = check_vsr(g)
        if p is not None and check_case_invariants(g, p).ok:
            tags[p.case_tag] += 1
print("signed graphs on at most 6 vertices passing every case check:", dict(tags))
