"""Walk through each construction family and compare its exact M value with the closed-form bound.

Run with ``python3 demos/constructions_tour.py``.
"""
from kcolour import bounds
from kcolour.constructions import (
    bg_family_colouring,
    blowup_colouring,
    hypercube_colouring,
    subset_partition_colouring,
    triangle_colouring,
)
from kcolour.search import M_value, Query

ROWS = [
    ("hypercube(16,7)", hypercube_colouring(16, 7), 2, 1, bounds.hypercube_upper(16, 7, 2)),
    ("subset-partition(20,5,2)", subset_partition_colouring(20, 5, 2), 2, 1, bounds.subset_partition_upper(20, 5, 2)),
    ("blowup(12,8)", blowup_colouring(12, 8), 1, 1, bounds.blowup_upper(12, 8, 1)),
    ("blowup(12,8)", blowup_colouring(12, 8), 2, 1, bounds.blowup_upper(12, 8, 2)),
    ("triangle(12,2,large)", triangle_colouring(12, 2, "large"), 2, 2, bounds.three_two_exact(12, 2)),
    ("bg-family(14,2,2)", bg_family_colouring(14, 2, 2), 2, 2, bounds.bg_family_upper(14, 2)),
]


def main() -> None:
    print(f"{'colouring':28} {'s':>2} {'k':>2} {'M':>4} {'bound':>6}  witness")
    for label, f, s, k, bound in ROWS:
        rep = M_value(f, Query(s, k))
        colours = ",".join(map(str, rep.witness_colours))
        print(f"{label:28} {s:>2} {k:>2} {rep.value:>4} {bound:>6}  {len(rep.witness_vertices)} vertices, colours {colours}")


if __name__ == "__main__":
    main()
