#!/usr/bin/env python3
"""The smallest non-flat regular polytopes, rank by rank.

The simplex is always smallest.  Doubling one or two entries of its
symbol from 3 to 6 through a central extension gives the next few, and
the builders certify each order against the closed form
(prod p_i / 3^(n-1)) * (n+1)!.
"""

import itertools

from polyflag.analysis import analyze, min_nonflat_flags
from polyflag.constructions import simplex_extension, table2_witness

print("rank  #1      #2      #3      #4")
for rank in range(3, 7):
    row = []
    for which in (1, 2, 3, 4):
        bound = min_nonflat_flags(rank, which)
        row.append(f"{bound.value}{'' if bound.exact else '+'}")
    print(f"{rank:>4}  " + "  ".join(f"{v:>6}" for v in row))

# witnesses for the rank-4 row
for which in (1, 2, 3, 4):
    group = table2_witness(4, which)
    if group is None:
        print(f"rank 4 #{which}: value only")
        continue
    report = analyze(group)
    print(f"rank 4 #{which}: order {report.order},"
          f" symbol {report.schlafli}, non-flat {not report.is_flat}")

# the full {3,6} pattern sweep at rank 4
for periods in itertools.product((3, 6), repeat=3):
    report = analyze(simplex_extension(*periods))
    print(f"extension {periods}: order {report.order:>5},"
          f" vertices {report.f_vector[0]},"
          f" flat {report.is_flat}")
