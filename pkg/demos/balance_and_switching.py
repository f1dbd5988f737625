"""Balance certificates, switching, and the rank of the incidence matrix."""
from sgmatrix import (balanced_component_count, incidence, is_balanced, rank_gf2, rank_rational,
                      switch_set, switching_equivalent)
from sgmatrix.named import cycle_graph, sigma4

g = sigma4()
cert = is_balanced(g)
print("sigma4 balanced:", cert.balanced, "negative circle:", cert.witness)

# Switching at {1, 2} changes the signs but not the balance status.
h = switch_set(g, {1, 2})
print("switched signs:", h.signs(), "equivalent via:", switching_equivalent(g, h))

for name, sg in (("+C5", cycle_graph(5).with_sign(1)), ("-C5", cycle_graph(5).with_sign(-1)),
                 ("sigma4", g)):
    b, c = balanced_component_count(sg)
    h = incidence(sg)
    print(f"{name}: n={sg.n} balanced components={b} components={c} "
          f"rank over Q={rank_rational(h)} rank over GF(2)={rank_gf2(h)}")
