"""Command-line front end: cluster point files, generate, benchmark, validate.

Exit codes: 0 success; 1 ``check`` found an admissible but coarser-than-
components labelling; 2 malformed input data; 3 invalid flag value or
combination for the given input; 4 ``check`` found an inadmissible labelling.
"""

from __future__ import annotations

import argparse
import sys
from importlib.metadata import PackageNotFoundError, version

from .errors import (
    ClusteringError,
    DuplicatePointError,
    LabelDomainError,
    NonRealSpectrumError,
)
from .genbench import (
    DEFAULT_DELTA,
    DEFAULT_TIMEOUT_SECONDS,
    BenchCase,
    Distribution,
    run_bench,
    write_records_csv,
)
from .pipeline import (
    ALGORITHMS,
    check_labels,
    cluster_points,
    default_perturb_magnitude,
    generate_points,
)
from .spectrum import PlanePoint

EXIT_OK = 0
EXIT_COARSER = 1
EXIT_DATA = 2
EXIT_FLAGS = 3
EXIT_INADMISSIBLE = 4


class _DataError(Exception):
    """Malformed input data; maps to exit code 2."""


class _FlagError(Exception):
    """Invalid flag value or combination; maps to exit code 3."""


def _package_version() -> str:
    try:
        return version("eigencluster")
    except PackageNotFoundError:
        return "0.0.0+uninstalled"


def parse_points_file(path: str) -> list[PlanePoint]:
    """Read one ``re,im`` pair per line; blank lines are ignored."""
    points = []
    try:
        with open(path) as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise _DataError(f"cannot read {path}: {exc}") from exc
    for lineno, line in enumerate(lines, start=1):
        text = line.strip()
        if not text:
            continue
        parts = text.split(",")
        if len(parts) != 2:
            raise _DataError(f"{path}:{lineno}: expected 're,im', got {text!r}")
        try:
            points.append(PlanePoint(float(parts[0]), float(parts[1])))
        except ValueError as exc:
            raise _DataError(f"{path}:{lineno}: {exc}") from exc
    return points


def parse_labels_file(path: str) -> list[int]:
    labels = []
    try:
        with open(path) as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise _DataError(f"cannot read {path}: {exc}") from exc
    for lineno, line in enumerate(lines, start=1):
        text = line.strip()
        if not text:
            continue
        try:
            labels.append(int(text))
        except ValueError as exc:
            raise _DataError(f"{path}:{lineno}: expected an integer label, got {text!r}") from exc
    return labels


def _check_delta(delta: float) -> float:
    if not delta > 0:
        raise _FlagError(f"--delta must be > 0, got {delta}")
    return delta


def _cmd_cluster(args) -> int:
    delta = _check_delta(args.delta)
    points = parse_points_file(args.input)
    if not points:
        raise _DataError(f"{args.input}: no points")
    if args.perturb is None:
        magnitude = None
    elif args.perturb == "auto":
        magnitude = default_perturb_magnitude(points)
    else:
        try:
            magnitude = float(args.perturb)
        except ValueError as exc:
            raise _FlagError(f"--perturb expects a number, got {args.perturb!r}") from exc
        if magnitude < 0:
            raise _FlagError(f"--perturb must be >= 0, got {magnitude}")
    try:
        clustering = cluster_points(
            points, delta, algorithm=args.algorithm, dsu_kind=args.dsu,
            mode=args.mode, dedup=args.dedup, perturb_magnitude=magnitude,
            conjugate_pairs=args.conjugate_pairs, seed=args.seed,
        )
    except NonRealSpectrumError as exc:
        raise _FlagError(f"--algorithm real: {exc}") from exc
    except DuplicatePointError as exc:
        raise _FlagError(f"--no-dedup without --perturb: {exc}") from exc
    for label in clustering.labels:
        print(label)
    print(clustering.k, file=sys.stderr)
    return EXIT_OK


def _cmd_generate(args) -> int:
    params = {}
    if args.dist == "circles":
        params = dict(circles=args.circles, spacing=args.spacing,
                      origin_multiplicity=args.origin_multiplicity)
    else:
        params = dict(side=args.side, center_spacing=args.center_spacing,
                      squares=args.squares)
    try:
        spectrum = generate_points(args.dist, args.n, args.seed, **params)
    except ValueError as exc:
        raise _DataError(str(exc)) from exc
    with open(args.output, "w") as fh:
        for p in spectrum.points:
            fh.write(f"{p.re!r},{p.im!r}\n")
    return EXIT_OK


def _distribution_from_args(args, kind: str) -> Distribution:
    if kind == "circles":
        return Distribution(kind="circles", circles=args.circles,
                            spacing=args.spacing,
                            origin_multiplicity=args.origin_multiplicity)
    if kind == "squares":
        return Distribution(kind="squares", side=args.side,
                            center_spacing=args.center_spacing,
                            squares=args.squares)
    raise _DataError(f"unknown distribution {kind!r}")


def _bench_plan(args) -> list[BenchCase]:
    delta = _check_delta(args.delta)
    cases: list[BenchCase] = []
    if args.plan:
        import csv

        try:
            with open(args.plan, newline="") as fh:
                reader = csv.DictReader(fh)
                expected = ["algorithm", "mode", "distribution", "n", "reps"]
                if reader.fieldnames != expected:
                    raise _DataError(
                        f"{args.plan}: expected header {','.join(expected)}, "
                        f"got {reader.fieldnames}")
                for row in reader:
                    cases.append(BenchCase(
                        algorithm=row["algorithm"], mode=row["mode"],
                        distribution=_distribution_from_args(args, row["distribution"]),
                        n=int(row["n"]), repetitions=int(row["reps"]),
                        delta=delta,
                    ))
        except OSError as exc:
            raise _DataError(f"cannot read {args.plan}: {exc}") from exc
        except (KeyError, ValueError) as exc:
            raise _DataError(f"{args.plan}: malformed plan row: {exc}") from exc
    elif args.sizes:
        try:
            sizes = [int(tok) for tok in args.sizes.split(",") if tok]
        except ValueError as exc:
            raise _FlagError(f"--sizes expects comma-separated integers: {exc}") from exc
        dist = _distribution_from_args(args, args.dist)
        for algorithm in args.algorithms.split(","):
            for mode in args.modes.split(","):
                for n in sizes:
                    cases.append(BenchCase(algorithm=algorithm, mode=mode,
                                           distribution=dist, n=n,
                                           repetitions=args.reps, delta=delta))
    if not cases:
        raise _DataError("no benchmark plan: provide --plan FILE or --sizes N1,N2,...")
    return cases


def _cmd_bench(args) -> int:
    cases = _bench_plan(args)
    records = run_bench(cases, timeout_seconds=args.timeout, base_seed=args.seed)
    write_records_csv(records, args.output)
    censored = sum(1 for r in records if r.censored)
    print(f"{len(records)} records ({censored} censored) -> {args.output}",
          file=sys.stderr)
    return EXIT_OK


def _cmd_check(args) -> int:
    delta = _check_delta(args.delta)
    points = parse_points_file(args.points)
    labels = parse_labels_file(args.labels)
    if len(points) != len(labels):
        raise _DataError(
            f"{args.labels}: {len(labels)} labels for {len(points)} points")
    if not points:
        raise _DataError(f"{args.points}: no points")
    try:
        outcome = check_labels(points, labels, delta)
    except LabelDomainError as exc:
        raise _DataError(str(exc)) from exc
    if not outcome.admissible:
        print(f"inadmissible: criterion {outcome.failed_criterion} violated "
              f"by {outcome.witness}", file=sys.stderr)
        return EXIT_INADMISSIBLE
    if outcome.matches_components:
        print(f"admissible, equals the {outcome.components_k} connected components",
              file=sys.stderr)
        return EXIT_OK
    print(
        f"admissible but coarser than the connected components "
        f"({outcome.given_k} clusters given, {outcome.components_k} components); "
        "admissibility does not imply minimality", file=sys.stderr)
    return EXIT_COARSER


def _add_dist_flags(parser: argparse.ArgumentParser):
    parser.add_argument("--circles", type=int, default=5,
                        help="number of concentric circles (circles dist)")
    parser.add_argument("--spacing", type=float, default=0.2,
                        help="radius step between circles (circles dist)")
    parser.add_argument("--origin-multiplicity", type=int, default=1,
                        help="exact copies placed at the origin (circles dist)")
    parser.add_argument("--side", type=float, default=0.04,
                        help="square side length (squares dist)")
    parser.add_argument("--center-spacing", type=float, default=0.15,
                        help="distance between square centers (squares dist)")
    parser.add_argument("--squares", type=int, default=5,
                        help="number of squares (squares dist)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eigencluster",
        description="Partition plane points into minimal delta-separated clusters.",
    )
    parser.add_argument("--version", action="version",
                        version=f"%(prog)s {_package_version()}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cluster", help="cluster a CSV file of re,im points")
    p.add_argument("input", help="points file, one 're,im' per line")
    p.add_argument("--delta", type=float, default=DEFAULT_DELTA)
    p.add_argument("--algorithm", choices=ALGORITHMS, default="delaunay")
    p.add_argument("--dsu", choices=("labels", "forest"), default="forest")
    p.add_argument("--mode", choices=("float", "filtered", "exact"),
                   default="filtered")
    p.add_argument("--dedup", action=argparse.BooleanOptionalAction, default=True,
                   help="collapse exactly equal points before clustering")
    p.add_argument("--perturb", nargs="?", const="auto", default=None,
                   metavar="MAG",
                   help="perturb coordinates uniformly by up to MAG "
                        "(default when bare: max|coord| * 2^-26)")
    p.add_argument("--conjugate-pairs", action="store_true",
                   help="reduce exact complex-conjugate pairs before clustering")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_cluster)

    p = sub.add_parser("generate", help="write a synthetic point file")
    p.add_argument("output")
    p.add_argument("--dist", choices=("circles", "squares"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    _add_dist_flags(p)
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("bench", help="time the algorithms and write a CSV")
    p.add_argument("output", help="benchmark CSV output path")
    p.add_argument("--plan", help="CSV plan: algorithm,mode,distribution,n,reps")
    p.add_argument("--algorithms", default="delaunay",
                   help="comma list: naive,naive-labels,real,delaunay")
    p.add_argument("--modes", default="filtered",
                   help="comma list: float,filtered,exact")
    p.add_argument("--dist", choices=("circles", "squares"), default="squares")
    p.add_argument("--sizes", help="comma list of problem sizes")
    p.add_argument("--reps", type=int, default=1)
    p.add_argument("--delta", type=float, default=DEFAULT_DELTA)
    p.add_argument("--timeout", type=float, default=DEFAULT_TIMEOUT_SECONDS,
                   help="censor runs longer than this many seconds")
    p.add_argument("--seed", type=int, default=0)
    _add_dist_flags(p)
    p.set_defaults(func=_cmd_bench)

    p = sub.add_parser("check", help="validate a labelling of a point file")
    p.add_argument("points")
    p.add_argument("labels", help="one cluster label per point line")
    p.add_argument("--delta", type=float, default=DEFAULT_DELTA)
    p.set_defaults(func=_cmd_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _DataError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except _FlagError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FLAGS
    except ClusteringError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
