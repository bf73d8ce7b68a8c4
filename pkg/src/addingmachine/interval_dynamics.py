"""Symmetric tent maps with exact arithmetic.

T_a(x) = a*x for x < 1/2 and a*(1-x) for x >= 1/2, with slope a in
[0, 2]. Parameters and points are Fractions or quadratic surds, so
orbits, kneading symbols, and interval endpoints are all exact; cycles
are detected by exact equality, never by closeness.

The renormalization detector looks for n closed intervals, one per
residue class of the iteration index, that are pairwise disjoint and
cyclically permuted by the map. Such a family is the interval
counterpart of one tower level of a cyclic partition, and certified
levels for sizes m_1 | m_2 | ... chain into an adding-machine-style
certificate (necessary evidence, not a proof of the full structure).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ExactnessError, InputError
from .exactnum import ExactNumber, Surd, exact_sign, format_exact, parse_exact

HALF = Fraction(1, 2)


def _coerce(value) -> ExactNumber:
    if isinstance(value, (Fraction, Surd)):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    if isinstance(value, str):
        return parse_exact(value)
    raise InputError(f"expected an exact number, got {value!r}")


@dataclass(frozen=True)
class TentParam:
    """A validated tent-map slope in [0, 2]."""

    a: ExactNumber

    def __post_init__(self):
        value = _coerce(self.a)
        object.__setattr__(self, "a", value)
        if value < 0 or value > 2:
            raise InputError(f"slope must lie in [0, 2], got {format_exact(value)}")

    @classmethod
    def from_text(cls, text: str) -> "TentParam":
        return cls(parse_exact(text))


def _slope(a) -> ExactNumber:
    if isinstance(a, TentParam):
        return a.a
    return TentParam(_coerce(a)).a


def tent_eval(a, x) -> ExactNumber:
    """One exact application of the tent map; x must lie in [0, 1]."""
    a = _slope(a)
    x = _coerce(x)
    if x < 0 or x > 1:
        raise InputError(f"point {format_exact(x)} outside [0, 1]")
    if x < HALF:
        return a * x
    return a * (1 - x)


@dataclass(frozen=True)
class OrbitSegment:
    """An exact orbit prefix; points[k+1] = T(points[k]).

    status is "exact-cycle-found" when some point repeated exactly
    (cycle_start and period then describe the cycle), "transient-only"
    when the budget ran out with all points distinct, and
    "budget-exhausted" when exactness could not be maintained and the
    orbit holds the computed prefix only.
    """

    points: tuple
    status: str
    cycle_start: int | None = None
    period: int | None = None

    @property
    def start(self):
        return self.points[0]

    def __len__(self):
        return len(self.points)


def critical_orbit(a, budget: int = 64) -> OrbitSegment:
    """Orbit of the turning point 1/2 under T_a, for budget applications."""
    a = _slope(a)
    if budget < 0:
        raise InputError(f"budget must be >= 0, got {budget}")
    points = [Fraction(1, 2)]
    seen = {points[0]: 0}
    for _ in range(budget):
        try:
            nxt = tent_eval(a, points[-1])
        except ExactnessError:
            return OrbitSegment(points=tuple(points), status="budget-exhausted")
        if nxt in seen:
            first = seen[nxt]
            return OrbitSegment(
                points=tuple(points),
                status="exact-cycle-found",
                cycle_start=first,
                period=len(points) - first,
            )
        seen[nxt] = len(points)
        points.append(nxt)
    return OrbitSegment(points=tuple(points), status="transient-only")


def kneading_sequence(a, length: int) -> str:
    """Symbols of T(c), T^2(c), ...: L below 1/2, C at it, R above."""
    a = _slope(a)
    if length < 0:
        raise InputError(f"length must be >= 0, got {length}")
    out = []
    x: ExactNumber = Fraction(1, 2)
    for _ in range(length):
        x = tent_eval(a, x)
        s = exact_sign(x - HALF)
        out.append("L" if s < 0 else ("C" if s == 0 else "R"))
    return "".join(out)


@dataclass(frozen=True)
class OmegaEstimate:
    """Closed rational-endpoint intervals covering the sampled tail.

    An outer cover of the observed samples: every post-transient sample
    lies inside some interval. Samples closer than the resolution are
    merged into one interval.
    """

    intervals: tuple
    resolution: ExactNumber
    transient: int
    window: int
    samples: tuple


def omega_limit_estimate(a, y, transient: int, window: int, resolution=0) -> OmegaEstimate:
    """Iterate past the transient, then cover the next window of points."""
    a = _slope(a)
    y = _coerce(y)
    resolution = _coerce(resolution)
    if transient < 0 or window < 1:
        raise InputError("need transient >= 0 and window >= 1")
    if resolution < 0:
        raise InputError("resolution must be >= 0")
    x = y
    for _ in range(transient):
        x = tent_eval(a, x)
    samples = []
    for _ in range(window):
        samples.append(x)
        x = tent_eval(a, x)
    ordered = sorted(set(samples))
    intervals = []
    lo = hi = ordered[0]
    for v in ordered[1:]:
        if v - hi <= resolution:
            hi = v
        else:
            intervals.append((lo, hi))
            lo = hi = v
    intervals.append((lo, hi))
    return OmegaEstimate(
        intervals=tuple(intervals),
        resolution=resolution,
        transient=transient,
        window=window,
        samples=tuple(samples),
    )


@dataclass(frozen=True)
class CycleDetection:
    """Outcome of the n-interval renormalization check.

    status: "certified" (disjoint hulls, cyclically mapped inside each
    other), "absent" (a witness breaks disjointness or containment),
    "degenerate" (the sampled tail is one repeated point, a trivial
    cycle that certifies nothing), or "inconclusive" (some residue class
    got no samples).
    intervals holds the n hulls when certified; overlap names two hull
    indices that touch; escape names (class j, image interval, target
    interval) when an image leaks out.
    """

    n: int
    status: str
    transient: int
    window: int
    margin: ExactNumber
    intervals: tuple | None = None
    overlap: tuple | None = None
    escape: tuple | None = None


def _tent_image(a, lo, hi):
    """Exact image interval of [lo, hi] under T_a."""
    if hi <= HALF:
        return a * lo, a * hi
    if lo >= HALF:
        return a * (1 - hi), a * (1 - lo)
    left, right = a * lo, a * (1 - hi)
    return (left if left <= right else right), a * HALF


def detect_interval_cycle(a, n: int, transient: int = 0, window: int = 64, margin=0) -> CycleDetection:
    """Look for n disjoint closed intervals cyclically permuted by T_a.

    Samples the critical orbit, groups sample k by k mod n, and takes
    each group's hull (widened by the margin, clamped to [0, 1]). The
    certificate requires exact pairwise disjointness and exact image
    containment T(I_j) inside I_{j+1 mod n}.
    """
    a = _slope(a)
    margin = _coerce(margin)
    if n < 1:
        raise InputError(f"cycle length must be >= 1, got {n}")
    if transient < 0 or window < 1:
        raise InputError("need transient >= 0 and window >= 1")
    if margin < 0:
        raise InputError("margin must be >= 0")
    x: ExactNumber = Fraction(1, 2)
    for _ in range(transient):
        x = tent_eval(a, x)
    groups: list[list[ExactNumber]] = [[] for _ in range(n)]
    for k in range(window):
        groups[(transient + k) % n].append(x)
        x = tent_eval(a, x)
    if any(not g for g in groups):
        return CycleDetection(
            n=n, status="inconclusive", transient=transient, window=window, margin=margin
        )
    distinct = {v for g in groups for v in g}
    if len(distinct) == 1:
        return CycleDetection(
            n=n, status="degenerate", transient=transient, window=window, margin=margin
        )
    hulls = []
    for g in groups:
        lo, hi = min(g) - margin, max(g) + margin
        if lo < 0:
            lo = Fraction(0)
        if hi > 1:
            hi = Fraction(1)
        hulls.append((lo, hi))
    order = sorted(range(n), key=lambda j: hulls[j][0])
    for prev, nxt in zip(order, order[1:]):
        if not hulls[prev][1] < hulls[nxt][0]:
            return CycleDetection(
                n=n, status="absent", transient=transient, window=window,
                margin=margin, overlap=(prev, nxt),
            )
    for j in range(n):
        img = _tent_image(a, *hulls[j])
        target = hulls[(j + 1) % n]
        if img[0] < target[0] or img[1] > target[1]:
            return CycleDetection(
                n=n, status="absent", transient=transient, window=window,
                margin=margin, escape=(j, img, target),
            )
    return CycleDetection(
        n=n, status="certified", transient=transient, window=window,
        margin=margin, intervals=tuple(hulls),
    )


DISCLAIMER = (
    "certified levels witness disjoint interval families cyclically permuted "
    "by the map; they are necessary evidence for adding-machine structure on "
    "the critical orbit closure, not a proof of it"
)


@dataclass(frozen=True)
class TowerCertificate:
    """detect_interval_cycle run at each cumulative level size.

    levels pairs each size with its CycleDetection; deepest_certified
    counts how many leading levels certified. The disclaimer travels
    with every certificate.
    """

    slope: ExactNumber
    sizes: tuple[int, ...]
    levels: tuple
    deepest_certified: int
    disclaimer: str = DISCLAIMER


def tower_certificate(a, primes, transient: int = 0, window: int = 64, margin=0) -> TowerCertificate:
    """Certify nested interval cycles at sizes p1, p1*p2, ... in order."""
    a = _slope(a)
    primes = tuple(primes)
    if not primes:
        raise InputError("need at least one prime level")
    for p in primes:
        if not isinstance(p, int) or isinstance(p, bool) or p < 2:
            raise InputError(f"level factor must be an integer >= 2, got {p!r}")
    sizes = []
    m = 1
    for p in primes:
        m *= p
        sizes.append(m)
    levels = tuple(
        detect_interval_cycle(a, size, transient=transient, window=window, margin=margin)
        for size in sizes
    )
    deepest = 0
    for det in levels:
        if det.status != "certified":
            break
        deepest += 1
    return TowerCertificate(
        slope=a, sizes=tuple(sizes), levels=levels, deepest_certified=deepest
    )
