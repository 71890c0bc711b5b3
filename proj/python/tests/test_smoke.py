import json
import math

import pytest

import moonexp


def test_j1_coefficients():
    j = moonexp.j1_series(4)
    assert j.lo == -1
    assert j.coeffs[:4] == [1, 0, 196884, 21493760]
    assert j.coeff(3) == 864299970
    with pytest.raises(moonexp.PrecisionError):
        j.coeff(4)


def test_big_coefficients_are_exact():
    j = moonexp.j1_series(200)
    assert 2**200 < j.coeff(199) < 2**300
    assert j.coeff(199) % 2 == 0


def test_series_arithmetic():
    t2 = moonexp.tn_series(2, 30)
    assert t2.coeffs[:4] == [1, -24, 276, -2048]
    s2 = moonexp.sn_series(2, 30)
    prod = t2 * s2
    assert prod.is_constant()
    assert prod.coeff(0) == 4096
    one = t2 * moonexp.series_inv(t2)
    assert one.coeff(0) == 1 and one.is_constant()
    with pytest.raises(moonexp.DomainError):
        moonexp.series_inv(moonexp.QSeries(0, [2], 5))


def test_operators_and_faber():
    j = moonexp.j1_series(80)
    assert moonexp.u_operator(j, 2).coeff(1) == 21493760
    assert moonexp.faber_poly(2) == [-393768, 0, 1]
    f = moonexp.v_operator(moonexp.j1_series(40), 2) + 2 * moonexp.u_operator(j, 2)
    assert [f.coeff(n) for n in (-2, -1, 0)] == [1, 0, 0]


def test_valuations():
    diff = moonexp.j1_series(52) - moonexp.hauptmodul_jn(5, 52)
    assert moonexp.vp_min(diff, 5, -1, 50) == 5
    assert moonexp.vp_min(moonexp.QSeries(0, [], 10), 5, 0, 9) == math.inf
    assert moonexp.vp_p_j1_up(11) == 2
    assert moonexp.vp_p_j1_up(71) == 1


def test_supersingular():
    assert moonexp.ss_j_set(13)["s1"] == [5]
    assert moonexp.ss_j_set(37)["s2_pairs"]
    row = moonexp.ss_j1_table(71)
    assert (row["minus744"], row["c984"], row["other"]) == (37, 61, [6, 7, 14, 32, 54])
    assert moonexp.a1_valuations(47) == {5: 1, 8: 3, 17: 1, 18: 1, 44: 2}


def test_exponents():
    assert moonexp.thm11_rhs(5) == (3, 5, 1, 9)
    assert moonexp.thm12_rhs(7) == 6
    r = moonexp.verify_prime(2)
    assert (r["vp_monster"], r["rhs11"], r["expected_discrepancy"], r["pass"]) == (46, 36, True, True)
    assert moonexp.verify_prime(59)["pass"]


def test_cli_roundtrip():
    code, out, err = moonexp.run_command(["verify", "--primes", "5..13", "--format", "json"])
    assert code == 0, err
    doc = json.loads(out)
    assert [r["rhs11"] for r in doc["results"]] == [9, 6, 2, 3]
    assert moonexp.run_command(["verify", "--primes", "4"])[0] == 2
