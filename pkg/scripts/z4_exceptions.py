"""Enumerate normalized cubics over Z_4 that are nonzero only at 0."""
from nullkit.numapps import normalized_cubic_exceptions, zm_second_nonzero

for P in normalized_cubic_exceptions():
    rep = zm_second_nonzero(P, 4, 1)
    print(f"{P}: nonzero count {rep.nonzero_count}, binomial sum {rep.binomial_sum}")
