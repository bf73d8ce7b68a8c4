"""Command line interface.

Three command families: `odometer` for exact mixed-radix arithmetic,
`ifs` for analyzing finite systems from description files, and `tent`
for exact tent-map orbits and renormalization certificates.

Exit codes: 0 for a completed computation or verified certificate, 1
for rejected input, 2 when a verification finds a counterexample.
Reports contain no timestamps or environment data, so a repeated
invocation is byte-identical.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from . import conjugacy, finite_ifs, interval_dynamics, odometer
from .errors import AddingMachineError, InputError, NoCanonicalCoverError
from .exactnum import format_exact, parse_exact
from .ifs_io import load_ifs


@dataclass
class AnalysisConfig:
    """Everything one invocation needs: command, inputs, bounds, output."""

    command: str
    inputs: tuple[str, ...] = ()
    bounds: dict = field(default_factory=dict)
    output: str | None = None
    fmt: str = "text"


def _emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)


def _fmt_states(xs) -> str:
    return " ".join(str(x) for x in sorted(xs))


def _fmt_block(block) -> str:
    return "{" + " ".join(str(x) for x in block) + "}"


def _fmt_interval(iv) -> str:
    return f"[{format_exact(iv[0])}, {format_exact(iv[1])}]"


# -- odometer ---------------------------------------------------------------


def _cmd_odometer(args) -> int:
    if args.op in ("add", "dist"):
        base = odometer.BaseSequence.from_text(args.base)
        p = odometer.OdometerPoint.from_text(base, args.p)
        q = odometer.OdometerPoint.from_text(base, args.q)
        if args.op == "add":
            print(odometer.add(p, q).to_text())
        else:
            print(odometer.distance(p, q))
        return 0
    if args.op == "succ":
        base = odometer.BaseSequence.from_text(args.base)
        point = odometer.OdometerPoint.from_text(base, args.point)
        print(odometer.successor(point).to_text())
        return 0
    if args.op == "conjugate":
        b1 = odometer.BaseSequence.from_text(args.base1)
        b2 = odometer.BaseSequence.from_text(args.base2)
        m1 = odometer.prime_multiplicity(b1)
        m2 = odometer.prime_multiplicity(b2)
        lines = [
            "# odometer conjugate",
            f"# base1 = {b1}",
            f"# base2 = {b2}",
            f"M1: {m1}",
            f"M2: {m2}",
            f"conjugate: {'yes' if m1 == m2 else 'no'}",
        ]
        print("\n".join(lines))
        return 0
    raise InputError(f"unknown odometer operation {args.op!r}")


# -- ifs ----------------------------------------------------------------------


def _tower_lines(F, tower, fm) -> list[str]:
    sizes = " ".join(str(tower.size(i)) for i in range(1, tower.depth + 1))
    out = [f"tower: {' '.join(map(str, tower.primes)) or '(trivial)'}"
           + (f" (sizes {sizes})" if tower.depth else "")]
    for i in range(1, tower.depth + 1):
        blocks = " ".join(_fmt_block(b) for b in tower.levels[i - 1])
        out.append(f"level {i}: {blocks}")
    out.append("digits:")
    for x in F.states:
        vector = ",".join(map(str, fm.digits[x])) if fm.depth else "-"
        out.append(f"{x} -> {vector}")
    return out


def _cmd_ifs(args) -> int:
    config = AnalysisConfig(
        command=f"ifs {args.op}",
        inputs=(args.file,),
        output=getattr(args, "output", None),
    )
    F = load_ifs(args.file)
    if args.op == "analyze":
        bound = args.bound if args.bound is not None else F.n_states
        horizon = args.horizon if args.horizon is not None else F.n_states ** 2
        if bound < 1 or horizon < 1:
            raise InputError("bound and horizon must be >= 1")
        config.bounds = {"bound": bound, "horizon": horizon}
        lines = [
            "# ifs analyze",
            f"# input: {args.file}",
            f"# states: {F.n_states}",
            f"# labels: {' '.join(F.labels)}",
            f"# bound: {bound}",
            f"# horizon: {horizon}",
        ]
        if not finite_ifs.is_minimal(F):
            lines.append("minimal: no")
            lines.append(f"periodic: {_fmt_states(finite_ifs.periodic_points(F))}")
            _emit("\n".join(lines) + "\n", config.output)
            return 0
        lines.append("minimal: yes")
        spectrum = finite_ifs.nm_set(F, bound)
        lines.append(f"spectrum: {' '.join(map(str, spectrum.members))}")
        for n in spectrum.members:
            try:
                cover = finite_ifs.canonical_cover(F, n)
                blocks = " ".join(_fmt_block(b) for b in cover.sets)
                lines.append(f"cover[{n}]: {blocks}")
            except NoCanonicalCoverError as exc:
                lines.append(f"cover[{n}]: none ({exc.reason})")
        tower = conjugacy.max_tower(F)
        fm = conjugacy.build_factor_map(F, tower)
        lines.extend(_tower_lines(F, tower, fm))
        report = conjugacy.verify_equivariance(F, fm)
        for label, ok in report.per_label:
            lines.append(f"equivariance {label}: {'PASS' if ok else 'FAIL'}")
        rr = finite_ifs.regularly_recurrent_points(F, horizon)
        lines.append(f"recurrent: {_fmt_states(rr) if rr else '(none)'}")
        injective = conjugacy.injectivity_on_regularly_recurrent(F, fm, rr)
        lines.append(f"injective on recurrent: {'yes' if injective else 'no'}")
        _emit("\n".join(lines) + "\n", config.output)
        return 0 if report.passed else 2
    if args.op == "verify":
        lines = [
            "# ifs verify",
            f"# input: {args.file}",
            f"# states: {F.n_states}",
            f"# labels: {' '.join(F.labels)}",
        ]
        if not finite_ifs.is_minimal(F):
            raise InputError("verification needs a minimal system")
        tower = conjugacy.max_tower(F)
        fm = conjugacy.build_factor_map(F, tower)
        lines.extend(_tower_lines(F, tower, fm))
        report = conjugacy.verify_equivariance(F, fm)
        failed = False
        for label, ok in report.per_label:
            lines.append(f"equivariance {label}: {'PASS' if ok else 'FAIL'}")
            failed = failed or not ok
        if report.witness is not None:
            label, x = report.witness
            lines.append(f"counterexample: label {label} at state {x}")
        rr = finite_ifs.regularly_recurrent_points(F)
        injective = conjugacy.injectivity_on_regularly_recurrent(F, fm, rr)
        lines.append(
            f"injective on recurrent: {'yes' if injective else 'no'}"
            f" ({len(rr)} state{'s' if len(rr) != 1 else ''})"
        )
        failed = failed or not injective
        try:
            alpha = conjugacy.tower_to_alpha(tower)
            profile = " ".join(f"{p}^{k}" for p, k in alpha.multiplicities) or "(empty)"
            lines.append(f"base check: PASS ({profile})")
        except AddingMachineError as exc:
            lines.append(f"base check: FAIL ({exc})")
            failed = True
        lines.append(f"verdict: {'FAIL' if failed else 'PASS'}")
        _emit("\n".join(lines) + "\n", config.output)
        return 2 if failed else 0
    raise InputError(f"unknown ifs operation {args.op!r}")


# -- tent ---------------------------------------------------------------------


def _cmd_tent(args) -> int:
    if args.op == "orbit":
        a = parse_exact(args.a)
        orbit = interval_dynamics.critical_orbit(a, budget=args.budget)
        lines = [
            "# tent orbit",
            f"# a = {format_exact(interval_dynamics.TentParam(a).a)}",
            f"# budget = {args.budget}",
        ]
        for k, point in enumerate(orbit.points):
            lines.append(f"k={k}: {format_exact(point)}")
        lines.append(f"status: {orbit.status}")
        if orbit.status == "exact-cycle-found":
            lines.append(f"cycle: start {orbit.cycle_start} period {orbit.period}")
        print("\n".join(lines))
        return 0
    if args.op == "kneading":
        a = parse_exact(args.a)
        symbols = interval_dynamics.kneading_sequence(a, args.length)
        lines = [
            "# tent kneading",
            f"# a = {format_exact(interval_dynamics.TentParam(a).a)}",
            f"# length = {args.length}",
            symbols,
        ]
        print("\n".join(lines))
        return 0
    if args.op == "cycle":
        a = parse_exact(args.a)
        header = [
            f"# a = {format_exact(interval_dynamics.TentParam(a).a)}",
            f"# transient = {args.transient}, window = {args.window}, margin = {args.margin}",
        ]
        if args.primes:
            primes = _parse_primes(args.primes)
            cert = interval_dynamics.tower_certificate(
                a, primes, transient=args.transient, window=args.window,
                margin=parse_exact(args.margin),
            )
            lines = ["# tent tower"] + header
            lines.append(f"# primes = {','.join(map(str, primes))}")
            for size, det in zip(cert.sizes, cert.levels):
                lines.append(f"level size {size}: {det.status}")
            lines.append(f"deepest certified: {cert.deepest_certified}")
            lines.append(f"note: {cert.disclaimer}")
            print("\n".join(lines))
            return 0
        if args.n is None:
            raise InputError("tent cycle needs --n or --primes")
        det = interval_dynamics.detect_interval_cycle(
            a, args.n, transient=args.transient, window=args.window,
            margin=parse_exact(args.margin),
        )
        lines = ["# tent cycle"] + header
        lines.append(f"# n = {args.n}")
        lines.append(f"status: {det.status}")
        if det.status == "certified":
            for j, iv in enumerate(det.intervals):
                lines.append(f"I[{j}] = {_fmt_interval(iv)}")
        elif det.overlap is not None:
            j1, j2 = det.overlap
            lines.append(f"overlap: class {j1} and class {j2}")
        elif det.escape is not None:
            j, img, target = det.escape
            lines.append(
                f"escape: T(I[{j}]) = {_fmt_interval(img)} not inside "
                f"I[{(j + 1) % args.n}] = {_fmt_interval(target)}"
            )
        print("\n".join(lines))
        return 0
    if args.op == "sweep":
        start = parse_exact(args.start)
        stop = parse_exact(args.stop)
        step = parse_exact(args.step)
        if step <= 0:
            raise InputError("step must be positive")
        rows = ["a,level_certified,cycle_lengths,status"]
        margin = parse_exact(args.margin)
        primes = _parse_primes(args.primes) if args.primes else None
        a = start
        while a <= stop:
            if primes is not None:
                cert = interval_dynamics.tower_certificate(
                    a, primes, transient=args.transient, window=args.window, margin=margin
                )
                certified = [
                    str(size) for size, det in zip(cert.sizes, cert.levels)
                    if det.status == "certified"
                ]
                status = (
                    "certified" if cert.deepest_certified == len(cert.sizes)
                    else cert.levels[cert.deepest_certified].status
                )
                rows.append(
                    f"{format_exact(a)},{cert.deepest_certified},"
                    f"{';'.join(certified)},{status}"
                )
            else:
                if args.n is None:
                    raise InputError("tent sweep needs --n or --primes")
                det = interval_dynamics.detect_interval_cycle(
                    a, args.n, transient=args.transient, window=args.window, margin=margin
                )
                certified = det.status == "certified"
                rows.append(
                    f"{format_exact(a)},{1 if certified else 0},"
                    f"{args.n if certified else ''},{det.status}"
                )
            a = a + step
        _emit("\n".join(rows) + "\n", getattr(args, "output", None))
        return 0
    raise InputError(f"unknown tent operation {args.op!r}")


def _parse_primes(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t.strip()) for t in text.split(","))
    except ValueError:
        raise InputError(f"malformed prime list {text!r}") from None


# -- wiring -------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="addingmachine",
        description="exact adding machines, finite systems, tent maps",
    )
    top = parser.add_subparsers(dest="command", required=True)

    odo = top.add_parser("odometer", help="mixed-radix arithmetic")
    odo_ops = odo.add_subparsers(dest="op", required=True)
    p_add = odo_ops.add_parser("add", help="add two points digit-wise with carry")
    p_add.add_argument("--base", required=True, help="base as 'prefix;tail', e.g. '4,3;5'")
    p_add.add_argument("--p", required=True, help="point, least significant digit first")
    p_add.add_argument("--q", required=True)
    p_succ = odo_ops.add_parser("succ", help="add one")
    p_succ.add_argument("--base", required=True)
    p_succ.add_argument("--point", required=True)
    p_dist = odo_ops.add_parser("dist", help="exact distance between points")
    p_dist.add_argument("--base", required=True)
    p_dist.add_argument("--p", required=True)
    p_dist.add_argument("--q", required=True)
    p_conj = odo_ops.add_parser("conjugate", help="compare prime profiles of two bases")
    p_conj.add_argument("--base1", required=True)
    p_conj.add_argument("--base2", required=True)

    ifs = top.add_parser("ifs", help="finite iterated function systems")
    ifs_ops = ifs.add_subparsers(dest="op", required=True)
    p_an = ifs_ops.add_parser("analyze", help="minimality, spectrum, covers, tower")
    p_an.add_argument("file", help="system description file")
    p_an.add_argument("--bound", type=int, default=None, help="spectrum bound (default: state count)")
    p_an.add_argument("--horizon", type=int, default=None, help="recurrence horizon (default: state count squared)")
    p_an.add_argument("--output", default=None, help="write the report here instead of stdout")
    p_vf = ifs_ops.add_parser("verify", help="build and check the full certificate")
    p_vf.add_argument("file")
    p_vf.add_argument("--output", default=None)

    tent = top.add_parser("tent", help="exact tent-map dynamics")
    tent_ops = tent.add_subparsers(dest="op", required=True)
    p_orb = tent_ops.add_parser("orbit", help="critical orbit with exact cycle detection")
    p_orb.add_argument("--a", required=True, help="slope: rational or (p+q*sqrt(r))/s")
    p_orb.add_argument("--budget", type=int, default=64)
    p_kn = tent_ops.add_parser("kneading", help="symbol sequence of the critical orbit")
    p_kn.add_argument("--a", required=True)
    p_kn.add_argument("--length", type=int, required=True)
    p_cy = tent_ops.add_parser("cycle", help="interval cycle certificate")
    p_cy.add_argument("--a", required=True)
    p_cy.add_argument("--n", type=int, default=None, help="cycle length to certify")
    p_cy.add_argument("--primes", default=None, help="comma-separated level factors, e.g. 2,2")
    p_cy.add_argument("--transient", type=int, default=0)
    p_cy.add_argument("--window", type=int, default=64)
    p_cy.add_argument("--margin", default="0")
    p_sw = tent_ops.add_parser("sweep", help="CSV of certificates over a slope range")
    p_sw.add_argument("--from", dest="start", required=True)
    p_sw.add_argument("--to", dest="stop", required=True)
    p_sw.add_argument("--step", required=True)
    p_sw.add_argument("--n", type=int, default=None)
    p_sw.add_argument("--primes", default=None)
    p_sw.add_argument("--transient", type=int, default=0)
    p_sw.add_argument("--window", type=int, default=64)
    p_sw.add_argument("--margin", default="0")
    p_sw.add_argument("--output", default=None)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on usage errors; that code is reserved
        # here for mathematical counterexamples, so remap to plain 1
        return 0 if exc.code in (0, None) else 1
    try:
        if args.command == "odometer":
            return _cmd_odometer(args)
        if args.command == "ifs":
            return _cmd_ifs(args)
        if args.command == "tent":
            return _cmd_tent(args)
        raise InputError(f"unknown command {args.command!r}")
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except AddingMachineError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
