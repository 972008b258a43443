"""Compute small values of m(n, r, s, k) exhaustively, with and without vertex symmetry.

Run with ``python3 demos/brute_force_table.py``.
"""
from kcolour.search import Query, m_bruteforce

CASES = [(4, 2, 1, 1), (5, 2, 1, 1), (5, 2, 1, 2), (5, 3, 2, 1), (3, 3, 2, 2), (5, 3, 1, 1)]


def main() -> None:
    print(f"{'n':>2} {'r':>2} {'s':>2} {'k':>2} {'m':>3} {'classes':>8} {'with vertex sym':>16}")
    for n, r, s, k in CASES:
        a = m_bruteforce(n, r, Query(s, k), "colour-perm")
        b = m_bruteforce(n, r, Query(s, k), "colour-and-vertex")
        count = next(x for x in a.flags if x.startswith("colourings:")).split(":")[1]
        count_b = next(x for x in b.flags if x.startswith("colourings:")).split(":")[1]
        assert a.value == b.value
        print(f"{n:>2} {r:>2} {s:>2} {k:>2} {a.value:>3} {count:>8} {count_b:>16}")


if __name__ == "__main__":
    main()
