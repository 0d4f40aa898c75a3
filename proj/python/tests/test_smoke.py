from fractions import Fraction

import pytest

import yangian


def test_odd_generator_squares_to_zero():
    assert yangian.nf("t[1,2,1] t[1,2,1]", 1, 1) == "0"


def test_relation_matches_bracket():
    alg = yangian.Algebra(1, 1)
    a, b = alg.t(1, 2, 1), alg.t(2, 1, 1)
    rel = alg.relation(1, 2, 1, 2, 1, 1)
    assert a.bracket(b) == rel
    assert str(rel) == "-t[1,1,1] + t[2,2,1]"


def test_element_arithmetic():
    alg = yangian.Algebra(2, 1)
    x = alg.t(1, 1, 1)
    y = alg.t(2, 3, 1)
    assert (x + y) - y == x
    assert (x * Fraction(1, 2)) * 2 == x
    assert (x * "3/4").terms() == [(((1, 1, 1),), Fraction(3, 4))]
    assert y.parity() == 1 and x.parity() == 0
    assert not alg.zero()


def test_berezinian_first_coefficient():
    coeffs = yangian.series("ber", 1, 1, order=2)
    assert len(coeffs) == 3
    assert str(coeffs[0]) == "1"
    assert str(coeffs[1]) == "t[1,1,1] - t[2,2,1]"


def test_run_check_report_schema():
    report = yangian.run_check("thm2", 1, 1, order=4)
    assert report["verdict"] == "pass"
    assert report["check"] == "thm2_centrality"
    for key in ("check", "m", "n", "order", "convention", "verdict", "witnesses", "elapsed_ms"):
        assert key in report


def test_checks_listing():
    names = yangian.checks()
    assert "rtt_coeff" in names and "maps" in names
    assert yangian.check_applies("case2", 1, 2)
    assert not yangian.check_applies("case2", 1, 1)


def test_oracle_rtt():
    assert yangian.run_oracle("rtt", 1, 1)["verdict"] == "pass"


def test_errors_are_typed():
    with pytest.raises(yangian.ParseError):
        yangian.nf("t[1,1", 1, 1)
    with pytest.raises(yangian.InvalidIndex):
        yangian.nf("t[3,1,1]", 1, 1)
    with pytest.raises(yangian.UnknownCheck):
        yangian.run_check("bogus", 1, 1)
    with pytest.raises(yangian.ResourceLimitExceeded):
        yangian.run_check("gauss", 2, 1, max_terms=5)
