"""Run the constructive extractors on seeded random colourings and report how far above
their guaranteed lower bounds they land.

Run with ``python3 demos/extraction_walkthrough.py``.
"""
from kcolour import bounds
from kcolour.constructions import blowup_colouring, random_colouring
from kcolour.extract import extract_32k, extract_jump, extract_r21
from kcolour.graph import restrict
from kcolour.lemmas import mader_extract


def main() -> None:
    f = random_colouring(32, 7, seed=1)
    rep = extract_r21(f)
    print(f"two colours, connected, n=32 r=7: {rep.value} vertices (guarantee {4 * 32 // 8}) flags={rep.flags}")

    f = random_colouring(14, 3, seed=2)
    rep = extract_32k(f, 2)
    print(f"two colours, 2-connected, n=14 r=3: {rep.value} vertices (guarantee {14 - 2 + 1}) flags={rep.flags}")

    f = blowup_colouring(60, 18)
    for s in (2, 4, 6):
        rep = extract_jump(f, s)
        print(f"{s} colours on blowup(60,18): {rep.value} vertices (guarantee {bounds.rootk1_lower(60, 18, s)})")

    g = restrict(random_colouring(12, 2, seed=3), colours=[1])
    mader = mader_extract(g)
    print(f"colour-1 graph of a random 2-colouring of K_12: average degree {float(mader.alpha):.2f}, "
          f"extracted {mader.subgraph.order} vertices with connectivity {mader.connectivity}")


if __name__ == "__main__":
    main()
