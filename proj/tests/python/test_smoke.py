import os
import subprocess
from fractions import Fraction

import pytest

import qgiso


def test_rtt_suite_passes():
    r = qgiso.run_suite("rtt", n=2)
    assert r["schema"] == 1
    assert r["verdict"] == "pass"
    assert all(law["status"] == "pass" for law in r["laws"])


def test_phi_suite_n2_order8():
    r = qgiso.run_suite("phi", n=2, hbar_order=8)
    assert r["verdict"] == "pass"
    assert any(law["id"] == "qg.QG3" for law in r["laws"])
    assert r["config"]["g_choice"] == "sqrt"


def test_roots_defining_sl2():
    rs = qgiso.roots(2)
    assert rs[0] == [[Fraction(1, 2)], [Fraction(-1), Fraction(1)]]
    assert rs[1] == [[Fraction(-1, 2)], [Fraction(-1), Fraction(1)]]


def test_phi_e_is_e12_on_defining_sl2():
    mats = qgiso.phi_matrix(2, "defining", 6, "E", 1)
    assert mats[0] == [[0, 1], [0, 0]]
    assert all(all(x == 0 for row in m for x in row) for m in mats[1:])


def test_g_plus_squares_to_sinhc():
    g = qgiso.g_plus(8)
    sq = [sum(g[i] * g[m - i] for i in range(m + 1)) for m in range(8)]
    assert sq[:5] == [1, 0, Fraction(1, 24), 0, Fraction(1, 1920)]


def test_usage_error():
    with pytest.raises(ValueError):
        qgiso.run_suite("rtt", n=9)


def test_cli_exit_codes():
    cli = os.environ.get("QGISO_CLI")
    if not cli:
        pytest.skip("CLI path not provided")
    assert subprocess.run([cli, "verify", "rtt", "--n", "2"], capture_output=True).returncode == 0
    assert subprocess.run([cli, "verify", "rtt", "--n", "2", "--inject-fault"], capture_output=True).returncode == 1
    assert subprocess.run([cli, "verify", "nosuch"], capture_output=True).returncode == 2
