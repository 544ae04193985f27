"""Delta-permanents, their grid sums and Alon-Tarsi counts on a small example."""
from nullkit.gridcore import Grid
from nullkit.permanent import (
    OrientedMultigraph,
    RingMatrix,
    alon_tarsi_count,
    coloring_search,
    incidence_matrix,
    per_delta,
    permanent_formula,
)
from nullkit.ring import Integers, IntegersMod

Z = Integers()
A = RingMatrix.from_rows(Z, [[1, 2], [3, 4]])
print("per_(1,1) [[1,2],[3,4]] =", per_delta(A, (1, 1)))
print("grid sum on {0,1}^2     =", permanent_formula(A, [0, 0], Grid(Z, [[0, 1], [0, 1]])))

# directed 4-cycle with a chord: orientation counts and a 3-coloring from the grid
G = OrientedMultigraph((0, 1, 2, 3), ((0, 1), (1, 2), (2, 3), (3, 0), (0, 2)))
delta = G.head_degrees()
even, odd = alon_tarsi_count(G, delta)
print(f"delta={delta}: even={even} odd={odd} per={per_delta(incidence_matrix(G), delta)}")
R = IntegersMod(7)
colors = Grid(R, [list(range(k + 1)) for k in delta])
print("coloring:", coloring_search(incidence_matrix(G, R), None, colors))
