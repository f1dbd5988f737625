"""Signed line graphs: the identity 2I - H^T H, eigenvalue 2, and a claw."""
from sgmatrix import (check_line_eigenvalues, generalized_line_graph, line_adjacency_identity,
                      line_graph, reduced_line_graph, validate_circle_signs)
from sgmatrix.named import claw_source, complete_graph, sigma4

g = sigma4()
print(line_adjacency_identity(g).summary())
print(check_line_eigenvalues(g).summary())
print(validate_circle_signs(line_graph(g)).summary())

lam = reduced_line_graph(claw_source())
# Vertex 3 of the line graph is the source edge 23.
nbrs = sorted(e.other(3) for e in lam.incident(3))
print("reduced line graph of the digon source, neighbours of vertex 3:", nbrs)
print("edges among them:", [e.pair() for e in lam.edges if e.u in nbrs and e.v in nbrs])

glg = generalized_line_graph(complete_graph(3), [1, 0, 2])
print(f"generalised line graph of K3 with petals (1, 0, 2): n={glg.n} m={glg.m} "
      f"signs={set(glg.signs())}")
