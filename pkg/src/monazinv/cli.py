"""Command line front end.

Subcommands: enumerate a codebook, decode one received word (optionally
with its trace), corrupt a codeword with a seeded channel error, verify a
grid of code parameters exhaustively against the brute-force oracle, and
benchmark decoder scaling (CSV output, plus a rendered figure when writing
to a file).

Exit codes: 0 for success (a "?" decode answer is still success), 1 when
verification found counterexamples, 2 for usage, parse, or config errors.
Given the same command line and seed, every command except bench produces
byte-identical output; bench isolates its timing in the median_ns and
ns_per_symbol columns and the #slope footers.
"""

from __future__ import annotations

import argparse
import math
import random
import statistics
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from . import azinv, monotone, oracle, unified, words
from .monotone import MonotoneParams
from .azinv import AzinvParams
from .unified import DecodeTrace
from .words import ErrorClass, Word

VERIFY_FAILED = 1
USAGE_ERROR = 2

FAMILY_CLASSES = {
    "monotone": (ErrorClass.DELETION, ErrorClass.REVERSAL),
    "azinv": (ErrorClass.BAD, ErrorClass.BAR),
}

DEFAULT_GRID = """\
# family n m a [k=comma-list] classes=...   ("all" sweeps every residue)
monotone 4 9 0 k=1,3,6,8 classes=Del
monotone 6 20 all k=1,2,3,8,9,10 classes=Del,Rev
monotone 5 6 all classes=Del
monotone 5 10 all classes=Del,Rev
azinv 5 5 all classes=BAD
azinv 6 10 all classes=BAD,BAR
"""


@dataclass(frozen=True)
class RunReport:
    """One decode or corrupt invocation: what ran, what came out, how long."""

    command: str
    outcome: str
    trace: DecodeTrace | None
    timing_ns: int


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return USAGE_ERROR


def _parse_k(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"bad weight list: {text!r}")


def _parse_int(text: str, what: str) -> int:
    try:
        return int(text)
    except (TypeError, ValueError):
        raise ValueError(f"bad {what}: {text!r}")


def _build_params(args) -> MonotoneParams | AzinvParams:
    """Code parameters from the global flags; raises ValueError on bad input."""
    if not args.family:
        raise ValueError("--family is required")
    if args.n is None:
        raise ValueError("--n is required")
    n = _parse_int(args.n, "--n")
    if args.m is None:
        raise ValueError("--m is required")
    if args.family == "monotone":
        k = _parse_k(args.k) if args.k else tuple(range(1, n + 1))
        return MonotoneParams(n=n, m=args.m, a=args.a, k=k)
    if args.k:
        raise ValueError("--k applies to the monotone family only")
    return AzinvParams(n=n, m=args.m, a=args.a)


def _read_word(text: str) -> Word:
    if text == "-":
        text = sys.stdin.readline().strip()
    return words.parse_word(text)


def _format_trace(trace: DecodeTrace) -> str:
    parts = []
    if trace.residue is not None:
        parts.append(f"r={trace.residue}")
    if trace.weight is not None:
        parts.append(f"w={trace.weight}")
    if trace.position is not None:
        parts.append(f"p={trace.position}")
    if trace.inserted is not None:
        parts.append(f"b={trace.inserted}")
    return " ".join(parts)


def _params_flags(params: MonotoneParams | AzinvParams) -> str:
    family = "monotone" if isinstance(params, MonotoneParams) else "azinv"
    flags = f"--family {family} --n {params.n} --m {params.m} --a {params.a}"
    if isinstance(params, MonotoneParams):
        flags += " --k " + ",".join(str(v) for v in params.k)
    return flags


# --- enumerate -------------------------------------------------------------


def cmd_enumerate(args) -> int:
    try:
        params = _build_params(args)
        book = oracle.enumerate_codebook(params)
    except (ValueError, oracle.EnumerationLimitError) as exc:
        return _fail(str(exc))
    for word in book.words:
        print(word)
    print(f"# count={len(book.words)}")
    return 0


# --- decode ----------------------------------------------------------------


def cmd_decode(args) -> int:
    try:
        params = _build_params(args)
        received = _read_word(args.word)
    except ValueError as exc:
        return _fail(str(exc))
    start = time.perf_counter_ns()
    outcome = oracle.fast_decode(received, params)
    elapsed = time.perf_counter_ns() - start
    text = outcome.word if outcome.ok else f"? {outcome.failure.value}"
    report = RunReport(
        command=f"decode {received}", outcome=text, trace=outcome.trace, timing_ns=elapsed
    )
    print(report.outcome)
    if args.trace:
        line = _format_trace(outcome.trace)
        if line:
            print(line)
    return 0


# --- corrupt ---------------------------------------------------------------


def cmd_corrupt(args) -> int:
    try:
        params = _build_params(args)
        codeword = _read_word(args.word)
        error_class = ErrorClass.parse(args.error_class)
    except ValueError as exc:
        return _fail(str(exc))
    if error_class not in FAMILY_CLASSES[args.family]:
        return _fail(f"class {error_class} does not apply to family {args.family}")
    if not oracle.is_codeword(codeword, params):
        return _fail(f"{codeword} is not a codeword of the given code")
    positions = words.error_positions(codeword, error_class)
    if args.position is not None:
        if args.position not in positions:
            return _fail(
                f"position {args.position} is not valid for {error_class} on {codeword}"
            )
        chosen = args.position
        suffix = f"(pos={chosen})"
    else:
        if not positions:
            return _fail(f"{error_class} has no valid position on {codeword}")
        rng = random.Random(args.seed)
        chosen = rng.choice(positions)
        suffix = f"(pos={chosen} seed={args.seed})"
    print(f"{words.apply_error(codeword, error_class, chosen)} {suffix}")
    return 0


# --- verify ----------------------------------------------------------------


@dataclass(frozen=True)
class GridPoint:
    family: str
    n: int
    m: int
    a: int | None  # None sweeps all residues
    k: tuple[int, ...] | None
    classes: tuple[ErrorClass, ...]
    raw: str


class GridError(ValueError):
    pass


def parse_grid(text: str) -> list[GridPoint]:
    points = []
    for line_no, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) < 5:
            raise GridError(f"line {line_no}: expected 'family n m a [k=...] classes=...'")
        family = tokens[0]
        if family not in FAMILY_CLASSES:
            raise GridError(f"line {line_no}: unknown family {family!r}")
        try:
            n = _parse_int(tokens[1], "n")
            m = _parse_int(tokens[2], "m")
            a = None if tokens[3].lower() == "all" else _parse_int(tokens[3], "a")
        except ValueError as exc:
            raise GridError(f"line {line_no}: {exc}")
        k = None
        classes = None
        for token in tokens[4:]:
            if token.startswith("k="):
                try:
                    k = _parse_k(token[2:])
                except ValueError as exc:
                    raise GridError(f"line {line_no}: {exc}")
            elif token.startswith("classes="):
                try:
                    classes = tuple(
                        ErrorClass.parse(name) for name in token[len("classes=") :].split(",")
                    )
                except ValueError as exc:
                    raise GridError(f"line {line_no}: {exc}")
            else:
                raise GridError(f"line {line_no}: unexpected token {token!r}")
        if classes is None:
            raise GridError(f"line {line_no}: classes=... is required")
        for cls in classes:
            if cls not in FAMILY_CLASSES[family]:
                raise GridError(f"line {line_no}: class {cls} does not apply to {family}")
        if k is not None and family != "monotone":
            raise GridError(f"line {line_no}: k= applies to the monotone family only")
        points.append(
            GridPoint(family=family, n=n, m=m, a=a, k=k, classes=classes, raw=line)
        )
    return points


def _grid_params(point: GridPoint, a: int) -> MonotoneParams | AzinvParams:
    if point.family == "monotone":
        k = point.k if point.k is not None else tuple(range(1, point.n + 1))
        return MonotoneParams(n=point.n, m=point.m, a=a, k=k)
    return AzinvParams(n=point.n, m=point.m, a=a)


def _grid_codebooks(point: GridPoint) -> dict[int, oracle.Codebook]:
    """Codebooks for every requested residue, one pass over {0,1}^n."""
    a_values = range(point.m) if point.a is None else [point.a % point.m]
    params_by_a = {a: _grid_params(point, a) for a in a_values}
    if point.a is not None:
        a = point.a % point.m
        return {a: oracle.enumerate_codebook(params_by_a[a])}
    buckets: dict[int, list[Word]] = {a: [] for a in a_values}
    if point.family == "monotone":
        k = params_by_a[0].k
        for word in oracle.all_words(point.n):
            buckets[monotone.weighted_sum(word, k) % point.m].append(word)
    else:
        for word in oracle.all_words(point.n):
            ones = word.count("1")
            if ones == 0 or ones == point.n:
                continue
            buckets[azinv.deinterleaved_inversions(word) % point.m].append(word)
    return {
        a: oracle.Codebook(params=params_by_a[a], words=tuple(buckets[a]))
        for a in a_values
    }


@dataclass
class VerifyStats:
    code_points: int = 0
    decodes: int = 0
    failures: list = None

    def __post_init__(self):
        if self.failures is None:
            self.failures = []


def _verify_grid_line(point: GridPoint) -> VerifyStats:
    stats = VerifyStats()
    books = _grid_codebooks(point)
    for a, book in books.items():
        params = book.params
        stats.code_points += 1
        repro_base = f"monazinv {_params_flags(params)} decode"
        if isinstance(params, MonotoneParams):
            bindings = unified.monotone_binding(params)
        else:
            bindings = unified.azinv_binding(params)
        member_set = set(book.words)
        for x in book.words:
            out = oracle.fast_decode(x, params)
            stats.decodes += 1
            if not (out.ok and out.word == x):
                stats.failures.append(
                    (f"passthrough x={x} -> {_outcome_text(out)}", f"{repro_base} {x} --trace")
                )
        for cls in point.classes:
            index = oracle.preimage_index(book, cls)
            cert = oracle.certify_codebook(book, cls)
            if not cert.disjoint:
                stats.failures.append(
                    (
                        f"balls not disjoint for {cls}: {cert.witness[0]} and "
                        f"{cert.witness[1]} share {cert.image}",
                        f"{repro_base} {cert.image} --trace",
                    )
                )
            for y in sorted(index):
                owners = set(index[y])
                if len(y) == params.n and y in member_set:
                    owners.add(y)
                out = oracle.fast_decode(y, params)
                engine_out = unified.decode_received(y, *bindings)
                stats.decodes += 2
                if engine_out != out:
                    stats.failures.append(
                        (f"engine mismatch on y={y}", f"{repro_base} {y} --trace")
                    )
                if len(owners) == 1:
                    expected = next(iter(owners))
                    if not (out.ok and out.word == expected):
                        stats.failures.append(
                            (
                                f"{cls} repair of y={y}: expected {expected}, "
                                f"got {_outcome_text(out)}",
                                f"{repro_base} {y} --trace",
                            )
                        )
                elif out.ok and out.word not in owners:
                    stats.failures.append(
                        (
                            f"{cls} repair of y={y} fabricated {out.word}",
                            f"{repro_base} {y} --trace",
                        )
                    )
    return stats


def _outcome_text(outcome) -> str:
    return outcome.word if outcome.ok else f"? {outcome.failure.value}"


def cmd_verify(args) -> int:
    if args.grid:
        try:
            text = Path(args.grid).read_text()
        except OSError as exc:
            return _fail(str(exc))
    else:
        text = DEFAULT_GRID
    try:
        points = parse_grid(text)
    except GridError as exc:
        return _fail(str(exc))
    if not points:
        return _fail("no grid points")
    for point in points:
        if point.n > oracle.DEFAULT_LIMIT:
            return _fail(f"n={point.n} exceeds the enumeration limit {oracle.DEFAULT_LIMIT}")
    total_failures = 0
    total_points = 0
    total_decodes = 0
    for point in points:
        try:
            stats = _verify_grid_line(point)
        except ValueError as exc:
            return _fail(f"grid line {point.raw!r}: {exc}")
        total_failures += len(stats.failures)
        total_points += stats.code_points
        total_decodes += stats.decodes
        status = "PASS" if not stats.failures else "FAIL"
        print(
            f"{status} {point.raw} [codes={stats.code_points} decodes={stats.decodes}"
            f" failures={len(stats.failures)}]"
        )
        for description, repro in stats.failures:
            print(f"  {description}")
            print(f"    repro: {repro}")
    if total_failures:
        print(f"FAILURES: {total_failures} across {total_points} codes")
        return VERIFY_FAILED
    print(f"ALL PASS ({len(points)} grid lines, {total_points} codes, {total_decodes} decodes)")
    return 0


# --- bench -----------------------------------------------------------------


@dataclass(frozen=True)
class BenchRow:
    family: str
    n: int
    error_class: ErrorClass
    median_ns: int
    ns_per_symbol: float


def _sample_word(rng: random.Random, n: int) -> Word:
    return format(rng.getrandbits(n), f"0{n}b")


def benchmark(
    family: str,
    sizes: list[int],
    repetitions: int,
    seed: int,
    classes: tuple[ErrorClass, ...] | None = None,
) -> list[BenchRow]:
    """Time decodes of randomly corrupted, randomly sampled codewords.

    Codewords come free by construction: sample x uniformly and aim the
    code's residue at x.  The modulus is picked so both error classes sit
    inside the correction tier.  One decode is run untimed as a warmup and
    sanity check; the timed runs then repeat the same repair.
    """
    if classes is None:
        classes = FAMILY_CLASSES[family]
    rng = random.Random(seed)
    rows = []
    for n in sizes:
        if family == "monotone":
            x = _sample_word(rng, n)
            params = monotone.levenshtein_params(n=n, m=2 * n, a=monotone.weighted_sum(x, tuple(range(1, n + 1))))
            decode = monotone.decode
        else:
            if n < 2:
                raise ValueError("azinv needs n >= 2")
            x = _sample_word(rng, n)
            while x.count("1") in (0, n):
                x = _sample_word(rng, n)
            params = AzinvParams(n=n, m=2 * (n - 1), a=azinv.deinterleaved_inversions(x))
            decode = azinv.decode
        for error_class in classes:
            positions = words.error_positions(x, error_class)
            chosen = rng.choice(positions)
            received = words.apply_error(x, error_class, chosen)
            outcome = decode(received, params)  # warmup plus sanity
            if not (outcome.ok and outcome.word == x):
                raise RuntimeError(
                    f"benchmark decode failed: {family} n={n} {error_class} pos={chosen}"
                )
            samples = []
            for _ in range(repetitions):
                start = time.perf_counter_ns()
                decode(received, params)
                samples.append(time.perf_counter_ns() - start)
            median_ns = int(statistics.median(samples))
            rows.append(
                BenchRow(
                    family=family,
                    n=n,
                    error_class=error_class,
                    median_ns=median_ns,
                    ns_per_symbol=median_ns / n,
                )
            )
    return rows


def least_squares_slope(xs: list[float], ys: list[float]) -> float:
    mean_x = sum(xs) / len(xs)
    mean_y = sum(ys) / len(ys)
    num = sum((x - mean_x) * (y - mean_y) for x, y in zip(xs, ys))
    den = sum((x - mean_x) ** 2 for x in xs)
    return num / den


def fit_slopes(rows: list[BenchRow]) -> dict[ErrorClass, float]:
    """Log-log slope of median time against size, one per error class.

    Classes with fewer than two distinct sizes get no slope.
    """
    by_class: dict[ErrorClass, list[BenchRow]] = {}
    for row in rows:
        by_class.setdefault(row.error_class, []).append(row)
    slopes = {}
    for error_class, class_rows in by_class.items():
        if len({row.n for row in class_rows}) < 2:
            continue
        xs = [math.log(row.n) for row in class_rows]
        ys = [math.log(row.median_ns) for row in class_rows]
        slopes[error_class] = least_squares_slope(xs, ys)
    return slopes


def render_csv(rows: list[BenchRow], slopes: dict[ErrorClass, float], seed: int) -> str:
    lines = ["family,n,error_class,median_ns,ns_per_symbol", f"#seed={seed}"]
    for row in rows:
        lines.append(
            f"{row.family},{row.n},{row.error_class},{row.median_ns},{row.ns_per_symbol:.3f}"
        )
    seen = []
    for row in rows:
        if row.error_class not in seen:
            seen.append(row.error_class)
    for error_class in seen:
        if error_class in slopes:
            lines.append(f"#slope={slopes[error_class]:.4f}")
    return "\n".join(lines) + "\n"


def render_scaling_figure(
    rows: list[BenchRow], slopes: dict[ErrorClass, float], family: str, path: Path
) -> None:
    """Log-log scaling plot next to the CSV report."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(6.4, 4.8))
    classes = []
    for row in rows:
        if row.error_class not in classes:
            classes.append(row.error_class)
    for error_class in classes:
        pts = [(row.n, row.median_ns) for row in rows if row.error_class is error_class]
        xs = [n for n, _ in pts]
        ys = [t / 1e6 for _, t in pts]
        label = str(error_class)
        if error_class in slopes:
            label += f" (slope {slopes[error_class]:.2f})"
        ax.plot(xs, ys, marker="o", label=label)
    if rows:
        n0, t0 = rows[0].n, rows[0].median_ns / 1e6
        guide_x = sorted({row.n for row in rows})
        ax.plot(
            guide_x,
            [t0 * n / n0 for n in guide_x],
            linestyle="--",
            color="gray",
            alpha=0.6,
            label="slope 1 guide",
        )
    ax.set_xscale("log", base=2)
    ax.set_yscale("log")
    ax.set_xlabel("block length n")
    ax.set_ylabel("median decode time (ms)")
    ax.set_title(f"{family} decoder scaling")
    ax.grid(True, which="both", alpha=0.3)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def cmd_bench(args) -> int:
    if not args.family:
        return _fail("--family is required")
    if args.n is None:
        return _fail("--n is required (comma-separated ascending sizes)")
    if args.m is not None or args.k or args.a:
        return _fail("bench picks m, a and k itself; only --family, --n, --seed apply")
    try:
        sizes = [_parse_int(part, "--n entry") for part in args.n.split(",")]
    except ValueError as exc:
        return _fail(str(exc))
    if sizes != sorted(sizes) or len(set(sizes)) != len(sizes):
        return _fail("sizes must be strictly ascending")
    if args.reps < 1:
        return _fail("--reps must be at least 1")
    classes = FAMILY_CLASSES[args.family]
    if args.classes:
        try:
            classes = tuple(ErrorClass.parse(name) for name in args.classes.split(","))
        except ValueError as exc:
            return _fail(str(exc))
        for cls in classes:
            if cls not in FAMILY_CLASSES[args.family]:
                return _fail(f"class {cls} does not apply to family {args.family}")
    try:
        rows = benchmark(args.family, sizes, args.reps, args.seed, classes)
    except ValueError as exc:
        return _fail(str(exc))
    slopes = fit_slopes(rows)
    text = render_csv(rows, slopes, args.seed)
    if args.out:
        csv_path = Path(args.out)
        try:
            csv_path.write_text(text)
        except OSError as exc:
            return _fail(str(exc))
        figure_path = csv_path.with_suffix(".png")
        render_scaling_figure(rows, slopes, args.family, figure_path)
        print(f"wrote {csv_path}")
        print(f"wrote {figure_path}")
    else:
        sys.stdout.write(text)
    return 0


# --- entry point -----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="monazinv",
        description="Decoders, channel simulators and exhaustive certification "
        "for two families of single-error binary codes.",
    )
    parser.add_argument("--family", choices=("monotone", "azinv"))
    parser.add_argument("--n", help="block length (bench: comma-separated ascending list)")
    parser.add_argument("--m", type=int, help="modulus")
    parser.add_argument("--a", type=int, default=0, help="target residue (default 0)")
    parser.add_argument("--k", help="comma-separated weights, monotone only (default 1..n)")
    parser.add_argument("--seed", type=int, default=0, help="RNG seed (default 0)")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("enumerate", help="list the codebook, one word per line")

    p = sub.add_parser("decode", help="decode one received word")
    p.add_argument("word", help="received word ('-' reads a line from stdin)")
    p.add_argument("--trace", action="store_true", help="print r, w, p, b")

    p = sub.add_parser("corrupt", help="apply one channel error to a codeword")
    p.add_argument("word", help="codeword ('-' reads a line from stdin)")
    p.add_argument("--class", dest="error_class", required=True, help="Del, Rev, BAD or BAR")
    p.add_argument("--position", type=int, help="error position (default: sampled with --seed)")

    p = sub.add_parser("verify", help="exhaustively check a parameter grid")
    p.add_argument("--grid", help="grid config file (default: a built-in grid)")

    p = sub.add_parser("bench", help="benchmark decoder scaling, CSV to stdout or --out")
    p.add_argument("--reps", type=int, default=5, help="timed repetitions per point (default 5)")
    p.add_argument("--classes", help="comma-separated error classes (default: both for the family)")
    p.add_argument("--out", help="CSV file path; a .png figure lands next to it")

    return parser


_COMMANDS = {
    "enumerate": cmd_enumerate,
    "decode": cmd_decode,
    "corrupt": cmd_corrupt,
    "verify": cmd_verify,
    "bench": cmd_bench,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return _COMMANDS[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
