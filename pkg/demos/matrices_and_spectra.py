"""Adjacency, Kirchhoff and incidence matrices of a small signed graph and their spectra."""
from sgmatrix import (adjacency, adjacency_spectrum, check_kirchhoff_bounds, incidence, kirchhoff,
                      kirchhoff_spectrum, write_matrix)
from sgmatrix.named import complete_graph, sigma4, sigma4_orientation

g = sigma4()
h = incidence(g, sigma4_orientation())
print("A =", write_matrix(adjacency(g)), sep="\n")
print("H =", write_matrix(h), sep="\n")
print("K = D - A =", write_matrix(kirchhoff(g)), sep="\n")
print("H H^T equals K:", (h @ h.T == kirchhoff(g)).all())
print("adjacency eigenvalues:", [round(x, 6) for x in adjacency_spectrum(g)])
print("Kirchhoff eigenvalues:", [round(x, 6) for x in kirchhoff_spectrum(g)])

# The all-negative complete graph attains the largest Kirchhoff eigenvalue 2(n-1).
rep = check_kirchhoff_bounds(complete_graph(4).with_sign(-1))
print("-K4:", rep.summary())
