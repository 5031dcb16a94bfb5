"""Command-line surface: puzzle file I/O and named verification suites.

Puzzle files are plain integer grids: a header line "m n", then m lines of n
space-separated entries where 0 marks a blank and 1..m*n is a clue. Comment
lines starting with "#" may appear anywhere. Output is deterministic for
every subcommand regardless of worker count; long runs report progress on
stderr only.
"""

from __future__ import annotations

import argparse
import os
import re
import sys
from dataclasses import dataclass

from . import analyze, construct, enumeration
from .enumeration import ENUMERATION_CELL_LIMIT
from .errors import NumbrixError, PuzzleFormatError
from .grid import BoardDims, Cell
from .model import ClueSet, Solution, clue_screen
from .construct import Corner, ZigZagSpec

_TOKEN = re.compile(r"\S+")


@dataclass(frozen=True)
class PuzzleDocument:
    """A parsed puzzle file: board dimensions plus row-major entries, 0 for blank."""

    dims: BoardDims
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.dims.size:
            raise ValueError(f"expected {self.dims.size} entries, got {len(self.entries)}")
        self.clue_set()  # validates ranges and duplicates

    def clue_set(self) -> ClueSet:
        return ClueSet(self.dims, {self.dims.cell_at(i): v
                                   for i, v in enumerate(self.entries) if v != 0})

    @classmethod
    def from_clue_set(cls, clues: ClueSet) -> "PuzzleDocument":
        entries = [0] * clues.dims.size
        for cell, value in clues.assignments.items():
            entries[clues.dims.index_of(cell)] = value
        return cls(clues.dims, tuple(entries))

    @classmethod
    def from_solution(cls, solution: Solution) -> "PuzzleDocument":
        return cls(solution.dims, solution.values)


def parse_puzzle(text: str) -> PuzzleDocument:
    """Parse a puzzle document, reporting the line and column of any defect."""
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if raw.lstrip().startswith("#") or not raw.strip():
            continue
        lines.append((lineno, raw))
    if not lines:
        raise PuzzleFormatError("empty document", 1, 1)

    def tokens(lineno: int, raw: str) -> list[tuple[int, str]]:
        return [(match.start() + 1, match.group()) for match in _TOKEN.finditer(raw)]

    def parse_int(lineno: int, col: int, token: str, what: str) -> int:
        try:
            return int(token)
        except ValueError:
            raise PuzzleFormatError(f"{what}: {token!r} is not an integer", lineno, col) from None

    header_line, header_raw = lines[0]
    header = tokens(header_line, header_raw)
    if len(header) != 2:
        raise PuzzleFormatError(
            f"header must be 'rows cols', found {len(header)} tokens", header_line,
            header[0][0] if header else 1)
    rows = parse_int(header_line, header[0][0], header[0][1], "row count")
    cols = parse_int(header_line, header[1][0], header[1][1], "column count")
    if rows < 1 or cols < 1:
        raise PuzzleFormatError("board dimensions must be positive", header_line, header[0][0])
    dims = BoardDims(rows, cols)

    body = lines[1:]
    if len(body) != rows:
        last_line = body[-1][0] if body else header_line
        raise PuzzleFormatError(f"expected {rows} grid rows, found {len(body)}", last_line, 1)
    entries: list[int] = []
    seen: dict[int, tuple[int, int]] = {}
    for (lineno, raw), _row in zip(body, range(rows)):
        row_tokens = tokens(lineno, raw)
        if len(row_tokens) != cols:
            # point at the first excess token, or at the short row's last one
            at = row_tokens[cols][0] if len(row_tokens) > cols else row_tokens[-1][0]
            raise PuzzleFormatError(
                f"expected {cols} entries, found {len(row_tokens)}", lineno, at)
        for col_pos, token in row_tokens:
            value = parse_int(lineno, col_pos, token, "entry")
            if not 0 <= value <= dims.size:
                raise PuzzleFormatError(
                    f"entry {value} out of range 0..{dims.size}", lineno, col_pos)
            if value and value in seen:
                raise PuzzleFormatError(f"value {value} appears twice", lineno, col_pos)
            if value:
                seen[value] = (lineno, col_pos)
            entries.append(value)
    return PuzzleDocument(dims, tuple(entries))


def format_puzzle(doc: PuzzleDocument) -> str:
    """Canonical rendering: header then rows, single spaces, newline-terminated."""
    n = doc.dims.cols
    out = [f"{doc.dims.rows} {doc.dims.cols}"]
    for r in range(doc.dims.rows):
        out.append(" ".join(str(v) for v in doc.entries[r * n:(r + 1) * n]))
    return "\n".join(out) + "\n"


def _grid_block(values, dims: BoardDims) -> str:
    return format_puzzle(PuzzleDocument(dims, tuple(values)))


def _progress(enabled: bool):
    if not enabled:
        return None

    def report(done: int, total: int) -> None:
        print(f"progress: {done}/{total}", file=sys.stderr, flush=True)

    return report


def _resolve_threads(args: argparse.Namespace) -> int:
    if getattr(args, "threads", None) is not None:
        return max(1, args.threads)
    env = os.environ.get("NUMBRIX_THREADS", "").strip()
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise NumbrixError(f"NUMBRIX_THREADS must be an integer, got {env!r}") from None
    return 1


def _cmd_solve(args: argparse.Namespace) -> int:
    if args.file == "-":
        text = sys.stdin.read()
    else:
        with open(args.file, "r", encoding="utf-8") as handle:
            text = handle.read()
    doc = parse_puzzle(text)
    outcome = enumeration.solve(doc.dims, doc.clue_set(),
                                count_cap=args.cap, retain=args.retain)
    if outcome.count == 0:
        print("NONE")
    elif outcome.count == 1 and not outcome.capped:
        print("UNIQUE")
    elif outcome.capped:
        print(f"MULTIPLE >={outcome.count}")
    else:
        print(f"MULTIPLE {outcome.count}")
    for solution in outcome.solutions:
        print()
        sys.stdout.write(_grid_block(solution.values, solution.dims))
    return 0


def _cmd_gen(args: argparse.Namespace) -> int:
    dims = BoardDims(args.rows, args.cols)
    if args.kind == "zigzag":
        spec = ZigZagSpec(Corner(args.corner))
        solution = construct.zigzag_solution(dims, spec)
        sys.stdout.write(_grid_block(solution.values, dims))
    elif args.kind == "min-clues":
        sys.stdout.write(format_puzzle(PuzzleDocument.from_clue_set(construct.minimal_clues(dims))))
    elif args.kind == "max-nondef":
        sys.stdout.write(format_puzzle(
            PuzzleDocument.from_clue_set(construct.max_nondefining_clues(dims))))
    else:  # circular: cell's entry is its 1-based position along the closed tour
        path = construct.circular_path(dims)
        order = [0] * dims.size
        for position, cell in enumerate(path.cells, start=1):
            order[dims.index_of(cell)] = position
        sys.stdout.write(_grid_block(order, dims))
    return 0


def _require_allow_long(args: argparse.Namespace, what: str) -> None:
    if not args.allow_long:
        raise NumbrixError(f"{what} is a long run; pass --allow-long to confirm")


def _cmd_count_paths(args: argparse.Namespace) -> int:
    dims = BoardDims(args.rows, args.cols)
    long_run = dims.size > ENUMERATION_CELL_LIMIT
    if long_run:
        _require_allow_long(args, f"counting on {dims.rows}x{dims.cols}")
    if args.circuits:
        print(enumeration.count_hamiltonian_circuits(dims))
    else:
        print(enumeration.count_hamiltonian_paths(
            dims, threads=_resolve_threads(args), on_progress=_progress(long_run)))
    return 0


def _cmd_min_clues(args: argparse.Namespace) -> int:
    dims = BoardDims(args.rows, args.cols)
    report = analyze.min_clue_number(dims, k_max=args.kmax)
    print(f"board {dims.rows} {dims.cols}")
    print(f"searched-max {report.k_max_searched}")
    for k in report.insufficient_k:
        print(f"k {k} insufficient")
    if report.k_min is not None:
        print(f"min-clues {report.k_min}")
    else:
        print("min-clues unresolved")
    if report.witness is not None:
        print(f"witness-size {len(report.witness)}")
        print("witness")
        sys.stdout.write(format_puzzle(PuzzleDocument.from_clue_set(report.witness)))
    return 0


def _cmd_two_solutions(args: argparse.Namespace) -> int:
    first, second = construct.two_solutions_single_clue(
        args.cols, Cell(args.row, args.col), args.value)
    sys.stdout.write(_grid_block(first.values, first.dims))
    print()
    sys.stdout.write(_grid_block(second.values, second.dims))
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    suite = _SUITES[args.suite]
    checks = suite(args)
    failures = 0
    for label, ok in checks:
        print(f"{'ok' if ok else 'FAIL'} {label}")
        if not ok:
            failures += 1
    verdict = "PASS" if failures == 0 else f"FAIL ({failures} of {len(checks)})"
    print(f"suite {args.suite}: {verdict}")
    return 0 if failures == 0 else 1


def _suite_lemma2(args: argparse.Namespace) -> list[tuple[str, bool]]:
    top = args.max or 6
    checks = []
    for m in range(2, top + 1):
        for n in range(m, top + 1):
            dims = BoardDims(m, n)
            exists = enumeration.count_hamiltonian_circuits(dims) > 0
            expected = m % 2 == 0 or n % 2 == 0
            checks.append((f"closed-tour existence {m}x{n}: {exists} (expected {expected})",
                           exists == expected))
            if expected:
                path = construct.circular_path(dims)
                checks.append((f"constructed closed tour {m}x{n} has {len(path.cells)} cells",
                               len(path.cells) == dims.size))
    return checks


def _suite_thm_1xn(args: argparse.Namespace) -> list[tuple[str, bool]]:
    top = args.max or 9
    checks = []
    for n in range(1, top + 1):
        dims = BoardDims(1, n)
        expected_min = 0 if n == 1 else 1
        got_min = analyze.min_clue_number(dims).k_min
        checks.append((f"1x{n} minimum clues {got_min} (expected {expected_min})",
                       got_min == expected_min))
        if n > 1:
            expected_max = 1 if n % 2 == 1 else 0
            got_max = analyze.max_nondefining_number(dims).k_max_nondef
            checks.append((f"1x{n} max non-defining {got_max} (expected {expected_max})",
                           got_max == expected_max))
    return checks


def _suite_thm_2xn(args: argparse.Namespace) -> list[tuple[str, bool]]:
    top = args.max or 6
    checks = []
    for n in range(2, top + 1):
        dims = BoardDims(2, n)
        got_min = analyze.min_clue_number(dims).k_min
        checks.append((f"2x{n} minimum clues {got_min} (expected 2)", got_min == 2))
        exhaustive = dims.size <= analyze.EXHAUSTIVE_PAIR_LIMIT and n <= 5
        report = analyze.max_nondefining_number(dims, exhaustive=exhaustive)
        expected = 2 * n - 2
        checks.append((f"2x{n} max non-defining {report.k_max_nondef} (expected {expected}, "
                       f"{'exhaustive' if report.exhaustive else 'witness'})",
                       report.k_max_nondef == expected))
    return checks


def _suite_thm_max(args: argparse.Namespace) -> list[tuple[str, bool]]:
    top = args.max or 6
    checks = []
    for m in range(3, top + 1):
        for n in range(m, top + 1):
            dims = BoardDims(m, n)
            clues = construct.max_nondefining_clues(dims)
            outcome = enumeration.solve(dims, clues, count_cap=3, retain=0)
            checks.append((f"{m}x{n} with {len(clues)} clues has exactly 2 solutions "
                           f"(found {outcome.count}{'+' if outcome.capped else ''})",
                           outcome.count == 2 and not outcome.capped))
    return checks


def _suite_thm_upper(args: argparse.Namespace) -> list[tuple[str, bool]]:
    top = args.max or 8
    checks = []
    for m in range(3, top + 1):
        for n in range(m, top + 1):
            dims = BoardDims(m, n)
            clues = construct.minimal_clues(dims)
            outcome = enumeration.solve(dims, clues, count_cap=2, retain=1)
            expected = construct.zigzag_solution(dims, ZigZagSpec(Corner.TOP_RIGHT))
            unique = outcome.count == 1 and not outcome.capped
            matches_zigzag = unique and outcome.solutions[0] == expected
            checks.append((f"{m}x{n}: {len(clues)} clues define the top-right serpentine",
                           matches_zigzag))
    return checks


def _screened_single_clues(dims: BoardDims):
    for cell in dims.cells():
        for value in range(1, dims.size + 1):
            clue = ClueSet(dims, {cell: value})
            if clue_screen(clue):
                yield cell, value


def _suite_thm_3xn(args: argparse.Namespace) -> list[tuple[str, bool]]:
    top = args.max or 7
    checks = []
    for n in (3, 5, 7):
        if n > top:
            continue
        dims = BoardDims(3, n)
        bad = []
        for cell, value in _screened_single_clues(dims):
            first, second = construct.two_solutions_single_clue(n, cell, value)
            outcome = enumeration.solve(dims, ClueSet(dims, {cell: value}),
                                        count_cap=2, retain=0)
            if first == second or outcome.count < 2:
                bad.append((cell, value))
        checks.append((f"3x{n}: every screened single clue has two solutions "
                       f"({len(bad)} failures)", not bad))
        got_min = analyze.min_clue_number(dims).k_min
        checks.append((f"3x{n} minimum clues {got_min} (expected 2)", got_min == 2))
    return checks


def _suite_conj_5x5(args: argparse.Namespace) -> list[tuple[str, bool]]:
    dims = BoardDims(5, 5)
    checks = [
        ("5x5: no single clue defines", analyze.verify_no_k_defines(dims, 1)),
        ("5x5: no clue pair defines", analyze.verify_no_k_defines(dims, 2)),
    ]
    checks.append(("5x5 minimum clues is 3", analyze.min_clue_number(dims).k_min == 3))
    return checks


def _suite_conj_6x6(args: argparse.Namespace) -> list[tuple[str, bool]]:
    _require_allow_long(args, "the 6x6 clue-pair sweep")
    dims = BoardDims(6, 6)
    print("enumerating all 6x6 solutions...", file=sys.stderr, flush=True)
    checks = [
        ("6x6: no single clue defines", analyze.verify_no_k_defines(dims, 1)),
        ("6x6: no clue pair defines", analyze.verify_no_k_defines(dims, 2)),
    ]
    checks.append(("6x6 minimum clues is 3", analyze.min_clue_number(dims).k_min == 3))
    return checks


_SUITES = {
    "lemma2": _suite_lemma2,
    "thm-1xn": _suite_thm_1xn,
    "thm-2xn": _suite_thm_2xn,
    "thm-max": _suite_thm_max,
    "thm-upper": _suite_thm_upper,
    "thm-3xn": _suite_thm_3xn,
    "conj-5x5": _suite_conj_5x5,
    "conj-6x6": _suite_conj_6x6,
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="numbrix",
        description="Exact solver, constructors, and clue-count analysis for Numbrix boards.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="solve a puzzle file (use - for stdin)")
    p_solve.add_argument("file")
    p_solve.add_argument("--retain", type=int, default=1,
                         help="how many solutions to print (canonical order)")
    p_solve.add_argument("--cap", type=int, default=None,
                         help="stop counting after this many solutions")
    p_solve.add_argument("--threads", type=int, default=None,
                         help="accepted for interface symmetry; solving is sequential")
    p_solve.set_defaults(func=_cmd_solve)

    p_gen = sub.add_parser("gen", help="emit a named construction as a puzzle document")
    p_gen.add_argument("--rows", type=int, required=True)
    p_gen.add_argument("--cols", type=int, required=True)
    p_gen.add_argument("--kind", required=True,
                       choices=["zigzag", "min-clues", "max-nondef", "circular"])
    p_gen.add_argument("--corner", choices=[c.value for c in Corner], default="tr",
                       help="start corner for --kind zigzag")
    p_gen.set_defaults(func=_cmd_gen)

    p_count = sub.add_parser("count-paths", help="count solutions of the empty board")
    p_count.add_argument("--rows", type=int, required=True)
    p_count.add_argument("--cols", type=int, required=True)
    p_count.add_argument("--circuits", action="store_true",
                         help="count closed tours instead of open paths")
    p_count.add_argument("--allow-long", action="store_true")
    p_count.add_argument("--threads", type=int, default=None)
    p_count.set_defaults(func=_cmd_count_paths)

    p_min = sub.add_parser("min-clues", help="search the minimum defining clue count")
    p_min.add_argument("--rows", type=int, required=True)
    p_min.add_argument("--cols", type=int, required=True)
    p_min.add_argument("--kmax", type=int, default=None)
    p_min.add_argument("--threads", type=int, default=None)
    p_min.set_defaults(func=_cmd_min_clues)

    p_verify = sub.add_parser("verify", help="run a named verification suite")
    p_verify.add_argument("--suite", required=True, choices=sorted(_SUITES))
    p_verify.add_argument("--max", type=int, default=None,
                          help="largest board side to sweep")
    p_verify.add_argument("--allow-long", action="store_true")
    p_verify.add_argument("--threads", type=int, default=None)
    p_verify.set_defaults(func=_cmd_verify)

    p_two = sub.add_parser("two-solutions",
                           help="two solutions of a 3-row board sharing one clue")
    p_two.add_argument("--cols", type=int, required=True)
    p_two.add_argument("--row", type=int, required=True)
    p_two.add_argument("--col", type=int, required=True)
    p_two.add_argument("--value", type=int, required=True)
    p_two.set_defaults(func=_cmd_two_solutions)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (NumbrixError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
