"""Tent maps with exact arithmetic: orbits, kneading, interval cycles.

All computation here is exact: slopes are rationals or quadratic surds,
so orbit points, interval endpoints, and disjointness checks carry no
floating-point error. The interesting regime is slope just above 1,
where the critical orbit settles into families of disjoint intervals
that the map permutes cyclically.

Run as: python3 demos/tent_renormalization.py
"""

from fractions import Fraction

from addingmachine import (
    critical_orbit,
    detect_interval_cycle,
    format_exact,
    kneading_sequence,
    parse_exact,
    tower_certificate,
)


def main():
    print("exact critical orbits")
    for text in ("2", "13/10", "(0+1*sqrt(2))/1"):
        a = parse_exact(text)
        orbit = critical_orbit(a, budget=6)
        pts = "  ".join(format_exact(p) for p in orbit.points)
        print(f"  a = {text}: {pts}")
        print(f"    status {orbit.status}", end="")
        if orbit.cycle_start is not None:
            print(f", cycle starts at index {orbit.cycle_start}"
                  f" with period {orbit.period}")
        else:
            print()

    print("\nkneading symbols of the critical value")
    for text in ("2", "13/10", "(1+1*sqrt(5))/2"):
        print(f"  a = {text}: {kneading_sequence(parse_exact(text), 10)}")

    print("\ntwo-interval cycle at a = 13/10")
    det = detect_interval_cycle(Fraction(13, 10), 2)
    print(f"  status: {det.status}")
    for j, (lo, hi) in enumerate(det.intervals):
        print(f"  I[{j}] = [{format_exact(lo)}, {format_exact(hi)}]")
    print("  the map swaps the two intervals; their disjointness is exact")

    print("\nno such cycle at full slope")
    det = detect_interval_cycle(Fraction(2), 2)
    print(f"  a = 2: status {det.status}, classes {det.overlap} overlap")

    print("\nnested certificates at a = 11/10")
    cert = tower_certificate(Fraction(11, 10), (2, 2), window=128)
    for size, level in zip(cert.sizes, cert.levels):
        print(f"  {size} intervals: {level.status}")
    print(f"  deepest certified level: {cert.deepest_certified}")
    print(f"  note: {cert.disclaimer}")


if __name__ == "__main__":
    main()
