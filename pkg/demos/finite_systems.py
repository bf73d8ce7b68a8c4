"""Minimal sets of a finite system under words of a fixed length.

A finite iterated function system is a handful of maps on {0, ..., n-1}.
Fixing a word length n and looking at all length-n compositions splits
the space into the sets nothing shorter can see. This demo walks the
six-state examples where the splitting is easy to watch.

Run as: python3 demos/finite_systems.py
"""

from addingmachine import (
    canonical_cover,
    minimal_sets,
    nm_set,
    rotation_system,
)


def show(name, F, bound):
    print(f"{name}: labels {', '.join(F.labels)}")
    spectrum = nm_set(F, bound)
    print(f"  splitting lengths up to {bound}: {' '.join(map(str, spectrum.members))}")
    for n in range(1, bound + 1):
        report = minimal_sets(F, n)
        blocks = " ".join("{" + " ".join(map(str, b)) + "}" for b in report.sets)
        marker = "  <- new" if n in spectrum and n > 1 else ""
        print(f"  length {n}: {blocks}{marker}")
    for n in spectrum.members:
        cover = canonical_cover(F, n)
        assert cover.sets == minimal_sets(F, n).sets
    print()


def main():
    # one rotation: every divisor of six splits the cycle
    show("rotation by 1 on six states", rotation_system(6, [1]), 6)

    # adding a second rotation coarsens what survives: +3 glues the
    # classes mod 3 together, so only the parity split remains
    show("rotations by 1 and 3", rotation_system(6, [1, 3]), 6)

    # two steps sharing no common refinement beyond parity
    show("rotations by 1 and 5", rotation_system(6, [1, 5]), 6)


if __name__ == "__main__":
    main()
