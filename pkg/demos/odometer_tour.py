"""Mixed-radix counters: arithmetic, the metric, and the conjugacy invariant.

Run as: python3 demos/odometer_tour.py
"""

from addingmachine import (
    BaseSequence,
    OdometerPoint,
    add,
    as_residue,
    distance,
    odometers_conjugate,
    prime_multiplicity,
    successor,
)


def main():
    base = BaseSequence.from_text("4,3;5")
    print(f"base {base.to_text()}: radices start 4, 3, then 5 forever")

    x = OdometerPoint.zero(base, depth=4)
    print("\ncounting from zero (least significant digit first):")
    for k in range(8):
        print(f"  {k}: {x.to_text()}  residue {as_residue(x)}")
        x = successor(x)

    p = OdometerPoint.from_text(base, "3,2,1,0")
    q = OdometerPoint.from_text(base, "1,0,0,0")
    print(f"\ncarry chain: {p.to_text()} + {q.to_text()} = {add(p, q).to_text()}")
    full = OdometerPoint.from_text(base, "3,2,4,4")
    print(f"rollover:    {full.to_text()} + {q.to_text()} = {add(full, q).to_text()}")

    a = OdometerPoint.from_text(base, "0,0,0,0")
    b = OdometerPoint.from_text(base, "0,0,1,0")
    print(f"distance({a.to_text()}, {b.to_text()}) = {distance(a, b)}")
    print("points agreeing on a long prefix are close; the first")
    print("disagreement position sets the scale")

    print("\nclassification by prime content:")
    for text in ("4,3;5", "2,2,3;5", "2;5", ";6", ";2,3"):
        full = BaseSequence.from_text(text)
        print(f"  {text:10s} -> {prime_multiplicity(full).to_text()}")

    pairs = [("4,3;5", "2,2,3;5"), (";6", ";2,3"), ("2;5", "4;5")]
    print("\ntwo counters are the same machine exactly when the profiles match:")
    for t1, t2 in pairs:
        verdict = odometers_conjugate(
            BaseSequence.from_text(t1), BaseSequence.from_text(t2)
        )
        print(f"  {t1} ~ {t2}: {'yes' if verdict else 'no'}")


if __name__ == "__main__":
    main()
