from fractions import Fraction

import pytest

import phigroup


def test_numbers():
    assert phigroup.totient(12) == 4
    assert phigroup.factorize(360) == [(2, 3), (3, 2), (5, 1)]
    assert phigroup.phi_cyclic_sum(16) == 86
    assert phigroup.phi_cyclic_product(6) == 10
    assert phigroup.q_of(2310) == Fraction(72, 5)
    assert phigroup.q_of(1) == 1


def test_groups():
    a4 = phigroup.Group("alt:4")
    assert a4.order == 12 and len(a4) == 12
    assert not a4.is_cyclic()
    assert a4.count_sylow(3) == 4
    assert len(a4.sylow_subgroup(2)) == 4
    assert phigroup.Group("abelian:4x4").phi() == 28
    assert phigroup.Group("prod:cyclic:2,dicyclic:2").phi() == 28
    c6 = phigroup.Group("cyclic:6")
    assert c6.element_order(1) == 6
    assert sorted(c6.element_orders) == [1, 2, 3, 3, 6, 6]
    back = phigroup.Group.from_json(c6.to_json())
    assert back.name == "C6" and back.order == 6
    assert [g.name for g in phigroup.catalog(4)] == ["C4", "C2xC2"]


def test_errors():
    with pytest.raises(ValueError):
        phigroup.Group("torus:3")
    with pytest.raises(phigroup.OrderCapExceeded):
        phigroup.Group("cyclic:12", cap=10)
    with pytest.raises(phigroup.GroupAxiomError):
        phigroup.Group.from_table([[0, 1], [1, 1]])
    with pytest.raises(phigroup.HypothesisViolation):
        phigroup.lemma_n_geq_check(8)
    assert phigroup.lemma_n_geq_check(12) == {"holds": True, "equality": True, "rhs": 12}


def test_power_graph():
    pg = phigroup.power_graph(phigroup.Group("cyclic:6"))
    assert pg["n"] == 6
    assert len(pg["undirected"]) == 2
    assert "1 -> 0;" in phigroup.power_graph(phigroup.Group("cyclic:2"))["dot"]


def test_reports():
    rep = phigroup.verify_main(16)
    assert rep["pass"]
    rows = {r["group"]: r for r in rep["reports"][0]["rows"]}
    assert rows["C16"]["phi_G"] == 86 and rows["C4xC4"]["phi_G"] == 28
    assert len(phigroup.verify_main(1, 10)["reports"]) == 10
    crit = phigroup.criterion(phigroup.Group("alt:4"))
    assert crit["groups"][0]["summary"] == "no witness; n = Q\u03c6(o(g)) = 12; Sylow-3 count = 4"
    tables = phigroup.tables()
    assert tables["table1"][8]["Q_F"] == "252/11"
    assert all(v["pass"] for v in tables["verdicts"].values())
    sweep = phigroup.sweep(1000)
    assert all(v["pass"] for v in sweep.values())


def test_cli():
    code, out, _ = phigroup.run_cli(["q", "--n", "2310"])
    assert code == 0 and out == "72/5\n"
    code, _, err = phigroup.run_cli(["nope"])
    assert code == 2 and err
