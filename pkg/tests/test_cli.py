import subprocess
import sys

import pytest
from hypothesis import given
from hypothesis import strategies as st

from numbrix.cli import PuzzleDocument, format_puzzle, main, parse_puzzle
from numbrix.errors import PuzzleFormatError
from numbrix.grid import BoardDims, Cell

SMALL_PUZZLE = "3 3\n0 0 0\n0 0 2\n0 6 0\n"


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_parse_puzzle_examples():
    doc = parse_puzzle(SMALL_PUZZLE)
    assert doc.dims == BoardDims(3, 3)
    assert doc.clue_set().assignments == {Cell(1, 2): 2, Cell(2, 1): 6}
    solved = parse_puzzle("1 1\n1\n")
    assert solved.entries == (1,)
    fig_pair = parse_puzzle("2 2\n0 4\n2 0\n")
    assert fig_pair.clue_set().assignments == {Cell(0, 1): 4, Cell(1, 0): 2}


def test_parse_skips_comments_and_blank_lines():
    text = "# tiny board\n\n2 2\n# clue row\n0 4\n2 0\n"
    assert parse_puzzle(text) == parse_puzzle("2 2\n0 4\n2 0\n")


@pytest.mark.parametrize("text,line,column", [
    ("3\n0 0 0\n", 1, 1),                      # malformed header
    ("2 2\n0 0 0\n0 0\n", 2, 5),               # wrong entry count
    ("2 2\n1 2\n3 x\n", 3, 3),                 # non-integer entry
    ("2 2\n1 2\n3 9\n", 3, 3),                 # out of range
    ("2 2\n1 2\n1 3\n", 3, 1),                 # duplicate value
    ("2 2\n1 2\n", 2, 1),                      # missing row
])
def test_parse_errors_name_line_and_column(text, line, column):
    with pytest.raises(PuzzleFormatError) as err:
        parse_puzzle(text)
    assert err.value.line == line
    assert err.value.column == column
    assert f"line {line}, column {column}" in str(err.value)


def test_format_puzzle_round_trip():
    doc = parse_puzzle(SMALL_PUZZLE)
    assert format_puzzle(doc) == SMALL_PUZZLE
    assert parse_puzzle(format_puzzle(doc)) == doc
    assert format_puzzle(parse_puzzle("1 2\n1 2\n")) == "1 2\n1 2\n"


@given(st.integers(1, 4), st.integers(1, 4), st.data())
def test_format_parse_round_trip_random(rows, cols, data):
    size = rows * cols
    k = data.draw(st.integers(0, size))
    cells = data.draw(st.permutations(range(size)))[:k]
    values = data.draw(st.permutations(range(1, size + 1)))[:k]
    entries = [0] * size
    for cell, value in zip(cells, values):
        entries[cell] = value
    doc = PuzzleDocument(BoardDims(rows, cols), tuple(entries))
    assert parse_puzzle(format_puzzle(doc)) == doc


def test_solve_unique(tmp_path, capsys):
    puzzle = tmp_path / "board.txt"
    puzzle.write_text(SMALL_PUZZLE)
    code, out, err = run_cli(capsys, "solve", str(puzzle))
    assert code == 0
    assert out == "UNIQUE\n\n3 3\n9 4 3\n8 5 2\n7 6 1\n"


def test_solve_none_and_multiple(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("3 3\n2 0 0\n0 0 0\n0 0 0\n")  # even value on a white cell
    code, out, _ = run_cli(capsys, "solve", str(bad))
    assert code == 0 and out == "NONE\n"

    empty = tmp_path / "empty.txt"
    empty.write_text("2 2\n0 0\n0 0\n")
    code, out, _ = run_cli(capsys, "solve", str(empty), "--retain", "0")
    assert code == 0 and out == "MULTIPLE 8\n"
    code, out, _ = run_cli(capsys, "solve", str(empty), "--retain", "0", "--cap", "3")
    assert code == 0 and out == "MULTIPLE >=3\n"


def test_solve_retains_in_canonical_order(tmp_path, capsys):
    empty = tmp_path / "empty.txt"
    empty.write_text("1 2\n0 0\n")
    code, out, _ = run_cli(capsys, "solve", str(empty), "--retain", "2")
    assert code == 0
    assert out == "MULTIPLE 2\n\n1 2\n1 2\n\n1 2\n2 1\n"


def test_solve_reports_parse_errors(tmp_path, capsys):
    broken = tmp_path / "broken.txt"
    broken.write_text("2 2\n1 2\n")
    code, out, err = run_cli(capsys, "solve", str(broken))
    assert code == 2 and out == "" and "line 2" in err


def test_gen_round_trips_through_solve(tmp_path, capsys):
    code, out, _ = run_cli(capsys, "gen", "--rows", "4", "--cols", "5", "--kind", "min-clues")
    assert code == 0
    puzzle = tmp_path / "gen.txt"
    puzzle.write_text(out)
    code, out, _ = run_cli(capsys, "solve", str(puzzle))
    assert code == 0 and out.startswith("UNIQUE\n")


def test_gen_zigzag_corners(capsys):
    code, out, _ = run_cli(capsys, "gen", "--rows", "3", "--cols", "4",
                           "--kind", "zigzag", "--corner", "tr")
    assert code == 0
    assert out == "3 4\n4 3 2 1\n5 6 7 8\n12 11 10 9\n"
    code, out, _ = run_cli(capsys, "gen", "--rows", "2", "--cols", "2",
                           "--kind", "zigzag", "--corner", "tl")
    assert out == "2 2\n1 2\n4 3\n"


def test_gen_circular_is_a_closed_tour(capsys):
    code, out, _ = run_cli(capsys, "gen", "--rows", "4", "--cols", "5", "--kind", "circular")
    assert code == 0
    doc = parse_puzzle(out)
    order = {v: doc.dims.cell_at(i) for i, v in enumerate(doc.entries)}
    cells = [order[v] for v in range(1, doc.dims.size + 1)]
    ring = cells + [cells[0]]
    assert all(abs(a.row - b.row) + abs(a.col - b.col) == 1 for a, b in zip(ring, ring[1:]))


def test_gen_rejects_impossible_constructions(capsys):
    code, out, err = run_cli(capsys, "gen", "--rows", "3", "--cols", "3", "--kind", "circular")
    assert code == 2 and "error:" in err


def test_count_paths_and_circuits(capsys):
    code, out, _ = run_cli(capsys, "count-paths", "--rows", "4", "--cols", "4")
    assert code == 0 and out == "552\n"
    code, out, _ = run_cli(capsys, "count-paths", "--rows", "4", "--cols", "4", "--circuits")
    assert code == 0 and out == "6\n"


def test_count_paths_requires_allow_long_past_desk_scale(capsys):
    code, out, err = run_cli(capsys, "count-paths", "--rows", "7", "--cols", "7")
    assert code == 2 and "--allow-long" in err


def test_count_paths_deterministic_across_threads(capsys):
    outputs = set()
    for threads in ("1", "2", "4"):
        code, out, _ = run_cli(capsys, "count-paths", "--rows", "3", "--cols", "4",
                               "--threads", threads)
        assert code == 0
        outputs.add(out)
    assert outputs == {"124\n"}


def test_threads_env_variable(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("NUMBRIX_THREADS", "2")
    code, out, _ = run_cli(capsys, "count-paths", "--rows", "3", "--cols", "3")
    assert code == 0 and out == "40\n"
    monkeypatch.setenv("NUMBRIX_THREADS", "zzz")
    code, out, err = run_cli(capsys, "count-paths", "--rows", "3", "--cols", "3")
    assert code == 2 and "NUMBRIX_THREADS" in err


def test_min_clues_report(capsys):
    code, out, _ = run_cli(capsys, "min-clues", "--rows", "4", "--cols", "4")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "board 4 4"
    assert "k 0 insufficient" in lines and "k 1 insufficient" in lines
    assert "min-clues 2" in lines


def test_two_solutions_output(capsys):
    code, out, _ = run_cli(capsys, "two-solutions", "--cols", "7",
                           "--row", "0", "--col", "2", "--value", "11")
    assert code == 0
    first, second = out.split("\n\n")
    doc_a = parse_puzzle(first)
    doc_b = parse_puzzle(second)
    assert doc_a.entries[2] == doc_b.entries[2] == 11
    assert doc_a != doc_b


def test_two_solutions_rejects_wrong_color(capsys):
    code, out, err = run_cli(capsys, "two-solutions", "--cols", "5",
                             "--row", "0", "--col", "0", "--value", "2")
    assert code == 2 and "error:" in err


def test_verify_suite_pass_and_output_shape(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "lemma2", "--max", "4")
    assert code == 0
    lines = out.splitlines()
    assert lines[-1] == "suite lemma2: PASS"
    assert all(line.startswith("ok ") for line in lines[:-1])


@pytest.mark.parametrize("suite,extra", [
    ("lemma2", ["--max", "5"]),
    ("thm-1xn", ["--max", "6"]),
    ("thm-2xn", ["--max", "4"]),
    ("thm-max", ["--max", "4"]),
    ("thm-upper", ["--max", "5"]),
    ("thm-3xn", ["--max", "5"]),
    ("conj-5x5", []),
])
def test_every_fast_suite_passes(capsys, suite, extra):
    code, out, _ = run_cli(capsys, "verify", "--suite", suite, *extra)
    assert code == 0
    assert out.splitlines()[-1] == f"suite {suite}: PASS"


def test_verify_conj_6x6_requires_allow_long(capsys):
    code, out, err = run_cli(capsys, "verify", "--suite", "conj-6x6")
    assert code == 2 and "--allow-long" in err


def test_usage_errors_exit_2(capsys):
    assert main(["no-such-command"]) == 2
    assert main(["verify", "--suite", "no-such-suite"]) == 2
    assert main([]) == 2


def test_console_entry_point_subprocess():
    result = subprocess.run(
        [sys.executable, "-m", "numbrix", "count-paths", "--rows", "2", "--cols", "3"],
        capture_output=True, text=True)
    assert result.returncode == 0
    assert result.stdout == "16\n"


def test_stdout_byte_identical_across_processes_and_threads(tmp_path):
    puzzle = tmp_path / "p.txt"
    puzzle.write_text(SMALL_PUZZLE)
    outputs = set()
    for threads in ("1", "2"):
        for command in (["solve", str(puzzle), "--threads", threads],
                        ["solve", str(puzzle)]):
            result = subprocess.run([sys.executable, "-m", "numbrix", *command],
                                    capture_output=True, text=True)
            assert result.returncode == 0
            outputs.add(result.stdout)
    assert len(outputs) == 1
