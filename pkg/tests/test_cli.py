import io
import sys
from pathlib import Path

from woundcheck.cli import main

DEMOS = Path(__file__).resolve().parents[1] / "demos"
WOUND = str(DEMOS / "wound_forms.txt")
HOMS = str(DEMOS / "hom_scheme.txt")
SPLIT = str(DEMOS / "splitting_tower.txt")


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    old = sys.stdout, sys.stderr
    sys.stdout, sys.stderr = out, err
    try:
        code = main(argv)
    finally:
        sys.stdout, sys.stderr = old
    return code, out.getvalue(), err.getvalue()


def test_classify_wa_certified():
    code, out, err = run(["classify", WOUND, "Wa"])
    assert code == 0
    assert "wound: certified" in out
    assert "certificate.rank: 2" in out
    assert "elapsed_ms" in err


def test_classify_split_line_refuted():
    code, out, _ = run(["classify", WOUND, "Line"])
    assert code == 1
    assert "wound: refuted" in out
    assert "witness: (1, 0)" in out


def test_classify_mixed_relaxation():
    code, out, _ = run(["classify", WOUND, "Mixed"])
    assert code == 0
    assert "wound: certified (relaxation)" in out


def test_classify_reports_are_byte_stable():
    _, out1, _ = run(["classify", WOUND, "Va"])
    _, out2, _ = run(["classify", WOUND, "Va"])
    assert out1 == out2


def test_reduce_group_divisor():
    code, out, _ = run(["reduce", WOUND, "1*X^(p^2) + a*Y^(p^2)", "--group", "Va"])
    assert code == 0
    assert "remainder: 1*X^(p^0)" in out
    assert "replay.exact: true" in out


def test_reduce_h_equals_f():
    code, out, _ = run(["reduce", WOUND,
                        "2*X^(p^0) + 1*X^(p^2) + a*Y^(p^2)", "--group", "Va"])
    assert code == 0
    assert "remainder: 0" in out


def test_verify_hom_phi_b():
    code, out, _ = run(["verify-hom", HOMS, "phi_b"])
    assert code == 0
    assert "verified: true" in out


def test_derive_byte_stable_and_contains_equations():
    code1, out1, _ = run(["derive", HOMS, "Va", "U"])
    code2, out2, _ = run(["derive", HOMS, "Va", "U"])
    assert code1 == code2 == 0
    assert out1 == out2
    assert "constraints: 7" in out1
    assert "constraint.X.0:" in out1 and "constraint.Y.4:" in out1


def test_solve_hom_vu():
    code, out, _ = run(["solve", HOMS, "Va", "U", "--domain", "deg1"])
    assert code == 0
    assert "solutions: 3" in out
    assert "completeness: complete within bound" in out


def test_check_extension_gabber():
    code, out, _ = run(["check-extension", WOUND, "Ua"])
    assert code == 0
    assert "axiom.associativity.h1: pass" in out
    assert "commutative: false" in out
    assert "alternating: true" in out


def test_twist_wa():
    code, out, _ = run(["twist", WOUND, "Wa", "1"])
    assert code == 0
    assert "wound: refuted" in out
    assert "witness: (2*a, 1)" in out
    assert "relative_frobenius.hom: true" in out


def test_verify_iso_splitting():
    code, out, _ = run(["verify-iso", SPLIT, "split", "unsplit"])
    assert code == 0
    assert "mutually_inverse: true" in out


def test_parse_error_exit_code():
    code, _, err = run(["classify", WOUND, "NoSuchGroup"])
    assert code == 3
    assert "error" in err


def test_selftest_p3():
    code, out, _ = run(["selftest-paper", "3"])
    assert code == 0, out
    assert "selftest: pass" in out
    assert "FAIL" not in out


def test_selftest_p5():
    code, out, _ = run(["selftest-paper", "5"])
    assert code == 0, out
    assert "selftest: pass" in out


def test_selftest_p2():
    code, out, _ = run(["selftest-paper", "2"])
    assert code == 0, out
    assert "b2.hom_under_W2_relation" in out
    assert "selftest: pass" in out
