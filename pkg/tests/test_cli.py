from textwrap import dedent

import pytest

from addingmachine.cli import main

Z6_TWO_TEXT = dedent("""\
    states: 0 1 2 3 4 5
    label a: 1 2 3 4 5 0
    label b: 3 4 5 0 1 2
    """)


@pytest.fixture
def z6two(tmp_path):
    p = tmp_path / "z6two.ifs"
    p.write_text(Z6_TWO_TEXT)
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# -- odometer ------------------------------------------------------------------


def test_odometer_add(capsys):
    code, out, _ = run(capsys, "odometer", "add", "--base", "2,3;5",
                       "--p", "1,2,4", "--q", "1,1,0")
    assert code == 0
    assert out == "0,1,0\n"


def test_odometer_succ(capsys):
    code, out, _ = run(capsys, "odometer", "succ", "--base", "2;3",
                       "--point", "1,1,2")
    assert code == 0
    assert out == "0,2,2\n"


def test_odometer_succ_dyadic_rollover(capsys):
    code, out, _ = run(capsys, "odometer", "succ", "--base", ";2",
                       "--point", "1,1,1")
    assert code == 0
    assert out == "0,0,0\n"


def test_odometer_dist_dyadic(capsys):
    code, out, _ = run(capsys, "odometer", "dist", "--base", ";2",
                       "--p", "0,0,0,0", "--q", "0,1,1,0")
    assert code == 0
    assert out == "3/8\n"


def test_odometer_dist(capsys):
    code, out, _ = run(capsys, "odometer", "dist", "--base", "2;2",
                       "--p", "0,1,1", "--q", "0,0,1")
    assert code == 0
    assert out == "1/4\n"


def test_odometer_conjugate_yes(capsys):
    code, out, _ = run(capsys, "odometer", "conjugate",
                       "--base1", "4,3;5", "--base2", "2,2,3;5")
    assert code == 0
    assert out == dedent("""\
        # odometer conjugate
        # base1 = 4,3;5
        # base2 = 2,2,3;5
        M1: 2^2 3^1 5^inf
        M2: 2^2 3^1 5^inf
        conjugate: yes
        """)


def test_odometer_conjugate_no(capsys):
    code, out, _ = run(capsys, "odometer", "conjugate",
                       "--base1", "4;5", "--base2", "2;5")
    assert code == 0
    assert "M1: 2^2 5^inf" in out
    assert "M2: 2^1 5^inf" in out
    assert out.endswith("conjugate: no\n")


def test_odometer_conjugate_needs_full_base(capsys):
    code, _, err = run(capsys, "odometer", "conjugate",
                       "--base1", "4,3", "--base2", "2,2,3;5")
    assert code == 1
    assert "';'" in err


def test_odometer_conjugate_rejects_finite_tails(capsys):
    # well-formed finite bases parse, but profiles need an infinite tail
    code, _, err = run(capsys, "odometer", "conjugate",
                       "--base1", "2,3;", "--base2", "6;")
    assert code == 1
    assert "infinite tail" in err


# -- ifs -----------------------------------------------------------------------


def test_ifs_analyze(capsys, z6two):
    code, out, _ = run(capsys, "ifs", "analyze", z6two)
    assert code == 0
    assert out == dedent(f"""\
        # ifs analyze
        # input: {z6two}
        # states: 6
        # labels: a b
        # bound: 6
        # horizon: 36
        minimal: yes
        spectrum: 1 2
        cover[1]: {{0 1 2 3 4 5}}
        cover[2]: {{0 2 4}} {{1 3 5}}
        tower: 2 (sizes 2)
        level 1: {{0 2 4}} {{1 3 5}}
        digits:
        0 -> 0
        1 -> 1
        2 -> 0
        3 -> 1
        4 -> 0
        5 -> 1
        equivariance a: PASS
        equivariance b: PASS
        recurrent: (none)
        injective on recurrent: yes
        """)


def test_ifs_analyze_not_minimal(capsys, tmp_path):
    p = tmp_path / "half.ifs"
    p.write_text("states: 0 1 2 3\nlabel a: 2 3 0 1\n")
    code, out, _ = run(capsys, "ifs", "analyze", str(p))
    assert code == 0
    assert "minimal: no" in out
    assert "periodic: 0 1 2 3" in out
    assert "spectrum" not in out


def test_ifs_analyze_six_cycle(capsys, tmp_path):
    p = tmp_path / "z6.ifs"
    p.write_text("states: 0 1 2 3 4 5\nlabel a: 1 2 3 4 5 0\n")
    code, out, _ = run(capsys, "ifs", "analyze", str(p), "--bound", "6")
    assert code == 0
    assert "spectrum: 1 2 3 6" in out
    assert "tower: 2 3 (sizes 2 6)" in out
    assert "equivariance a: PASS" in out


def test_ifs_verify_passes(capsys, tmp_path):
    p = tmp_path / "z4.ifs"
    p.write_text("states: 0 1 2 3\nlabel a: 1 2 3 0\n")
    code, out, _ = run(capsys, "ifs", "verify", str(p))
    assert code == 0
    assert "tower: 2 2 (sizes 2 4)" in out
    assert "digits:" in out
    assert "0 -> 0,0" in out
    assert "3 -> 1,1" in out
    assert "equivariance a: PASS" in out
    assert "injective on recurrent: yes (4 states)" in out
    assert "base check: PASS (2^2)" in out
    assert out.endswith("verdict: PASS\n")


def test_ifs_verify_rejects_non_minimal(capsys, tmp_path):
    p = tmp_path / "half.ifs"
    p.write_text("states: 0 1 2 3\nlabel a: 2 3 0 1\n")
    code, _, err = run(capsys, "ifs", "verify", str(p))
    assert code == 1
    assert "minimal" in err


def test_ifs_parse_error_reports_line(capsys, tmp_path):
    p = tmp_path / "bad.ifs"
    p.write_text("states: 0 1\nlabel a: 1 5\n")
    code, _, err = run(capsys, "ifs", "analyze", str(p))
    assert code == 1
    assert "line 2" in err


def test_ifs_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "ifs", "analyze", str(tmp_path / "nope.ifs"))
    assert code == 1
    assert "error" in err


def test_ifs_analyze_output_file_and_determinism(capsys, z6two, tmp_path):
    out1, out2 = tmp_path / "r1.txt", tmp_path / "r2.txt"
    assert main(["ifs", "analyze", z6two, "--output", str(out1)]) == 0
    assert main(["ifs", "analyze", z6two, "--output", str(out2)]) == 0
    capsys.readouterr()
    b1, b2 = out1.read_bytes(), out2.read_bytes()
    assert b1 == b2
    assert b1.decode().startswith("# ifs analyze")


# -- tent ----------------------------------------------------------------------


def test_tent_orbit(capsys):
    code, out, _ = run(capsys, "tent", "orbit", "--a", "(0+1*sqrt(2))/1",
                       "--budget", "8")
    assert code == 0
    assert out == dedent("""\
        # tent orbit
        # a = (0+1*sqrt(2))/1
        # budget = 8
        k=0: 1/2
        k=1: (0+1*sqrt(2))/2
        k=2: (-1+1*sqrt(2))/1
        k=3: (2-1*sqrt(2))/1
        status: exact-cycle-found
        cycle: start 3 period 1
        """)


def test_tent_orbit_full_slope_reaches_zero(capsys):
    code, out, _ = run(capsys, "tent", "orbit", "--a", "2", "--budget", "10")
    assert code == 0
    assert "k=0: 1/2\nk=1: 1\nk=2: 0\n" in out
    assert "cycle: start 2 period 1" in out


def test_tent_kneading(capsys):
    code, out, _ = run(capsys, "tent", "kneading", "--a", "13/10", "--length", "5")
    assert code == 0
    assert out.endswith("RLRRR\n")


def test_tent_cycle_certified(capsys):
    code, out, _ = run(capsys, "tent", "cycle", "--a", "13/10", "--n", "2")
    assert code == 0
    assert "status: certified" in out
    assert "I[0] = [91/200, 10621/20000]" in out
    assert "I[1] = [1183/2000, 13/20]" in out


def test_tent_cycle_absent(capsys):
    code, out, _ = run(capsys, "tent", "cycle", "--a", "2", "--n", "2")
    assert code == 0
    assert "status: absent" in out
    assert "overlap: class 0 and class 1" in out


def test_tent_tower(capsys):
    code, out, _ = run(capsys, "tent", "cycle", "--a", "11/10",
                       "--primes", "2,2", "--window", "128")
    assert code == 0
    assert "level size 2: certified" in out
    assert "level size 4: certified" in out
    assert "deepest certified: 2" in out
    assert "note: " in out


def test_tent_cycle_needs_n_or_primes(capsys):
    code, _, err = run(capsys, "tent", "cycle", "--a", "13/10")
    assert code == 1
    assert "--n or --primes" in err


def test_tent_sweep(capsys):
    code, out, _ = run(capsys, "tent", "sweep", "--from", "1", "--to", "3/2",
                       "--step", "1/4", "--primes", "2")
    assert code == 0
    assert out == dedent("""\
        a,level_certified,cycle_lengths,status
        1,0,,degenerate
        5/4,1,2,certified
        3/2,0,,absent
        """)


def test_tent_bad_slope(capsys):
    code, _, err = run(capsys, "tent", "orbit", "--a", "5/2", "--budget", "4")
    assert code == 1
    assert "slope" in err


# -- exit code remapping ----------------------------------------------------------


def test_usage_errors_exit_one(capsys):
    assert main(["odometer", "add", "--base", "2;2"]) == 1
    assert main(["tent", "nonsense"]) == 1
    assert main([]) == 1
    capsys.readouterr()


def test_help_exits_zero(capsys):
    assert main(["--help"]) == 0
    capsys.readouterr()
