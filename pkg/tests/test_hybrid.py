import pytest

from conftest import PAIRS, G
from mostow_hybrids.hybrid import (
    HEXAGON,
    HybridLabel,
    build_hybrid,
    core_polygon,
    core_polygon_checks,
    theorem_suite,
)
from mostow_hybrids.isometry import IsoType, classify
from mostow_hybrids.mostow import Phase
from mostow_hybrids.restrict import RegimeError


@pytest.mark.parametrize("p,t", PAIRS)
def test_hybrid_gamma1_gamma312(p, t):
    h = build_hybrid(G(p, t), HybridLabel.G1_G312)
    assert [a.name for a in h.gens1] == ["J^-1 R1 R2", "J R1 R3"]
    assert [a.name for a in h.gens2] == ["R1", "R3 J"]
    assert all(c.passed for c in h.conditions())


def test_hybrid_gamma312_gamma321_small_only():
    h = build_hybrid(G(3, 0), "H_Gamma312_Gamma321")
    assert h.line1.label == "v312" and h.line2.label == "v321"
    assert all(c.passed for c in h.conditions())
    for p, t in (("3", "7/30"), ("4", "1/4"), ("5", "7/10")):
        with pytest.raises(RegimeError):
            build_hybrid(G(int(p), t), HybridLabel.G312_G321)


def test_condition3_is_recorded_vacuous():
    h = build_hybrid(G(5, "11/30"), HybridLabel.G1_G312)
    c3 = h.conditions()[2]
    assert c3.passed and "vacuous" in c3.anchor
    assert "generators_stabilizing_both" in c3.certificate


def test_core_polygon_small():
    poly = core_polygon(G(3, "1/12"))
    assert poly.topology() == "right-angled hexagon"
    assert [v.walls for v in poly.hexagon] == list(zip(HEXAGON, HEXAGON[1:] + HEXAGON[:1]))
    assert all(v.orthogonal for v in poly.hexagon)
    assert all(v.norm_sign == -1 for v in poly.hexagon)


def test_core_polygon_critical():
    poly = core_polygon(G(4, "1/4"))
    assert poly.topology() == "ideal triangle"
    assert [v.norm_sign for v in poly.triangle] == [0, 0, 0]
    assert set(poly.mirror_types.values()) == {"parabolic"}


def test_core_polygon_large():
    poly = core_polygon(G(3, "7/30"))
    assert [v.norm_sign for v in poly.triangle] == [-1, -1, -1]
    assert all(t.endswith("elliptic") for t in poly.mirror_types.values())


@pytest.mark.parametrize("p,t", PAIRS)
def test_core_polygon_checks(p, t):
    assert all(c.passed for c in core_polygon_checks(G(p, t)))


def test_regimes_partition_pairs():
    phases = [G(p, t).phase for p, t in PAIRS]
    assert phases.count(Phase.SMALL) == 10
    assert phases.count(Phase.CRITICAL) == 2
    assert phases.count(Phase.LARGE) == 5


@pytest.mark.parametrize("p,t", [(3, "1/6"), (4, "1/4")])
def test_mirror_products_parabolic_at_critical(p, t):
    g = G(p, t)
    for w in ("J R1 R3", "J R2 R1", "J R3 R2"):
        assert classify(g.word(w)).tag is IsoType.PARABOLIC


@pytest.mark.parametrize("p,t", [(3, "7/30"), (3, "1/3"), (4, "5/12"), (5, "11/30"), (5, "7/10")])
def test_mirror_products_elliptic_at_large(p, t):
    g = G(p, t)
    for w in ("J R1 R3", "J R2 R1", "J R3 R2"):
        assert classify(g.word(w)).is_elliptic


@pytest.mark.parametrize("p,t", PAIRS)
def test_theorem_suite(p, t):
    g = G(p, t)
    res = theorem_suite(g)
    assert res.ok, [c.id for c in res.checks if not c.passed]
    assert res.verdicts["finite_index"] is True
    assert res.verdicts["virtually_hybrid"] is True
    if g.phase is Phase.SMALL:
        assert res.verdicts["full_lattice"] is True
    else:
        assert res.verdicts["full_lattice"] is None


def test_corollaries():
    res = theorem_suite(G(5, "11/30"))
    c = next(c for c in res.checks if "corollary" in c.id)
    assert c.passed
    assert c.certificate["restrictions"] == {"Gamma1": "△(3,10,30)", "Gamma312": "△(2,5,30)"}
    assert c.certificate["classes"]["Gamma1"] != c.certificate["classes"]["Gamma312"]
    res = theorem_suite(G(4, "1/12"))
    c = next(c for c in res.checks if "corollary" in c.id)
    assert c.certificate["restrictions"] == {"Gamma312": "△(2,4,12)", "Gamma321": "△(2,4,6)"}
    assert c.passed
    res = theorem_suite(G(5, "1/5"))
    c = next(c for c in res.checks if "corollary" in c.id)
    assert c.certificate["restrictions"] == {"Gamma312": "△(2,5,20)", "Gamma321": "△(2,4,5)"}
    assert c.passed
    # out of scope elsewhere
    res = theorem_suite(G(3, 0))
    assert not any("corollary" in c.id for c in res.checks)
    assert all(v is None for k, v in res.verdicts.items() if k.startswith("corollary"))
