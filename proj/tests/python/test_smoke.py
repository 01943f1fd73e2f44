import json
import math

import pytest

import skein


def test_trefoil_homfly():
    h = skein.homfly("BR[2; 1 1 1]")
    assert h["fdeg"] == 3
    assert h == skein.homfly("trefoil")


def test_closure_linking():
    c = skein.closure("hopf")
    assert c["lk"] == [[0, 1], [1, 0]]
    assert skein.format_braid("figure8") == "BR[3; 1 -2 1 -2]"


def test_colored_and_reduced():
    h = skein.colored("hopf", [[2], [1, 1]])
    assert h["fdeg"] == h["cable_fdeg"] == 8
    assert skein.reduced("unknot", [[2, 1]])["text"] == "1"


def test_kashaev_determinant():
    assert math.isclose(skein.kashaev("trefoil", 2)["value"]["abs"], 3.0, rel_tol=1e-12)
    assert math.isclose(skein.kashaev("figure8", 3)["value"]["re"], 13.0, rel_tol=1e-12)


def test_m_invariant_hopf():
    v = skein.m_invariant("hopf", 2, [1, 1])
    assert v["laurent"]
    assert v["text"] == "q^-1"


def test_alexander():
    fig8 = skein.alexander("figure8")
    assert fig8["normalization"] == "exact"
    assert fig8["text"] == "-t + 3 - t^-1"
    assert skein.alexander("t24")["normalization"] == "up_to_units"


def test_errors_raise():
    with pytest.raises(skein.SkeinError, match="IndexError"):
        skein.homfly("BR[2; 3]")
    with pytest.raises(skein.SkeinError, match="BudgetError"):
        skein.colored("figure8", [[2, 2]])


def test_verify_suite():
    assert "skein" in skein.suite_names()
    r = skein.verify("skein")
    assert r["pass"]
    assert r["passed"] == r["total"]


def test_cli_exit_codes(capfd):
    assert skein.run_cli(["homfly", "unknot"]) == 0
    out = json.loads(capfd.readouterr().out)
    assert out["fdeg"] == 0
    assert skein.run_cli(["homfly", "BR[2; 3]"]) == 2
