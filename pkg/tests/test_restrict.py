import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import PAIRS, G
from mostow_hybrids.cyclo import abs_squared
from mostow_hybrids.mostow import Phase, polar_vectors
from mostow_hybrids.restrict import (
    INF,
    CHARTS,
    Gamma,
    MobiusClass,
    MobiusKind,
    NotStabilizedError,
    RegimeError,
    TriangleSignature,
    chart_e1,
    chart_v312,
    classify_mobius,
    mobius_trace_invariant,
    restrict_isometry,
    stabilizer_restrictions,
    triangle_signature,
    verify_trace_formulas,
)


def kinds_for(g):
    return [Gamma.G312, Gamma.G1] + ([Gamma.G321] if g.phase is Phase.SMALL else [])


def test_R1_on_v312():
    for p, t in PAIRS:
        g = G(p, t)
        f, eta, phi, i = g.field, g.eta, g.phi, g.field.i
        m = restrict_isometry(g.R1, chart_v312(g))
        assert m == MobiusClass(((eta * eta, phi.conj() ** 2 - i * eta * phi), (f.zero, f.one)))
        assert mobius_trace_invariant(m) == abs_squared(1 + f.exp_i_pi(Fraction(2, p)))


def test_R3J_on_v312():
    g = G(4, "1/12")
    f, eta, phi, i = g.field, g.eta, g.phi, g.field.i
    m = restrict_isometry(g.word("R3 J"), chart_v312(g))
    assert m == MobiusClass(((f.zero, i * eta.conj() * phi.conj()), (f.one, f.zero)))
    assert mobius_trace_invariant(m) == 0
    t = classify_mobius(m)
    assert t.kind is MobiusKind.ELLIPTIC and t.order == 2


def test_identity_restricts_to_identity():
    g = G(5, "1/5")
    for name, make in CHARTS.items():
        m = restrict_isometry(g.identity(), make(g))
        assert m.is_scalar()


def test_gamma1_A_on_e1():
    for p, t in PAIRS:
        g = G(p, t)
        m = restrict_isometry(g.word("J^-1 R1 R2"), chart_e1(g))
        e = g.field.exp_i_pi(g.t + Fraction(1, 2) - Fraction(1, p))
        assert mobius_trace_invariant(m) == abs_squared(1 + e)


def test_parabolic_at_critical():
    g = G(4, "1/4")
    *_, mp = stabilizer_restrictions(Gamma.G312, g)
    assert classify_mobius(mp).kind is MobiusKind.PARABOLIC
    assert triangle_signature(Gamma.G312, g) == TriangleSignature((2, 4, INF))


def test_hyperbolic_synthetic():
    F = G(3, 0).field
    m = MobiusClass(((F(2), F(0)), (F(0), F(Fraction(1, 2)))))
    assert classify_mobius(m).kind is MobiusKind.HYPERBOLIC
    with pytest.raises(ValueError):
        MobiusClass(((F(1), F(1)), (F(1), F(1))))


def test_not_stabilized():
    g = G(3, "1/12")
    with pytest.raises(NotStabilizedError) as exc:
        restrict_isometry(g.J, chart_v312(g))
    assert exc.value.residual is not None


def test_regime_gate():
    with pytest.raises(RegimeError):
        triangle_signature(Gamma.G321, G(3, "7/30"))
    with pytest.raises(RegimeError):
        triangle_signature(Gamma.G321, G(4, "1/4"))


def test_chart_rejects_bad_lift():
    g = G(3, 0)
    c = chart_v312(g)
    from mostow_hybrids.restrict import LineChart

    with pytest.raises(ValueError):
        LineChart(c.polar, c.u, (g.field.one, g.field.zero, g.field.zero), g.form)


@pytest.mark.parametrize("p,t", PAIRS)
def test_restriction_acts_on_lifts(p, t):
    """A lift(z) is proportional to lift(M z) for points of the chart."""
    g = G(p, t)
    f = g.field
    for kind in kinds_for(g):
        chart, a, b, ma, mb, _ = stabilizer_restrictions(kind, g)
        for iso, m in ((a, ma), (b, mb)):
            for z in (f.zero, f.one, f.i, f(2) + f.zeta(1)):
                (c, d) = m.entries[1]
                if (c * z + d).is_zero():
                    continue
                image = iso.apply(chart.lift(z))
                assert image.is_proportional(chart.lift(m.apply(z)))


def test_transported_chart():
    g = G(3, "1/12")
    c = chart_v312(g)
    tc = c.transported(g.J)
    assert tc.polar.is_proportional(polar_vectors(g)["123"])
    # J R1 J^-1 = R2 acts on J(v312-perp) as R1 acts on v312-perp
    assert restrict_isometry(g.R2, tc) == restrict_isometry(g.R1, c)


# -- signatures ------------------------------------------------------------


def test_signature_type():
    s = TriangleSignature.parse("△(30, 5, 2)")
    assert s.entries == (2, 5, 30) and s.key() == "2,5,30" and str(s) == "△(2,5,30)"
    s = TriangleSignature.parse("inf,4,2")
    assert s.entries == (2, 4, INF) and s.key() == "2,4,inf" and str(s) == "△(2,4,∞)"
    assert not s.is_cocompact() and s.is_hyperbolic()
    assert not TriangleSignature((2, 3, 6)).is_hyperbolic()
    assert TriangleSignature((2, 3, 7)).euler_sum() == Fraction(41, 42)
    for bad in ("1,2,3", "2,3", "2,3,4,5"):
        with pytest.raises(ValueError):
            TriangleSignature.parse(bad)


def test_signature_examples():
    assert triangle_signature(Gamma.G312, G(3, 0)) == TriangleSignature((2, 3, 12))
    assert triangle_signature(Gamma.G1, G(5, "11/30")) == TriangleSignature((3, 10, 30))
    assert triangle_signature(Gamma.G321, G(4, "1/12")) == TriangleSignature((2, 4, 6))


def _order_from_closed_form(z):
    """|tr| = 2 cos(pi / n) read off numerically; 2 means infinity."""
    a = math.sqrt(abs(complex(z.to_complex())) ** 2)
    if abs(a - 2) < 1e-12:
        return INF
    n = math.pi / math.acos(a / 2)
    assert abs(n - round(n)) < 1e-9, n
    return round(n)


@pytest.mark.parametrize("p,t", PAIRS)
def test_signature_matches_closed_form_orders(p, t):
    """Independent route: element orders read from the closed-form traces."""
    from mostow_hybrids.restrict import _closed_forms

    g = G(p, t)
    for kind in kinds_for(g):
        orders = tuple(_order_from_closed_form(z) for z in _closed_forms(kind, g))
        assert triangle_signature(kind, g) == TriangleSignature(orders)


@pytest.mark.parametrize("p,t", PAIRS)
def test_trace_formulas(p, t):
    g = G(p, t)
    checks = verify_trace_formulas(g)
    assert len(checks) == 6 * len(kinds_for(g))
    assert all(c.passed for c in checks), [c.id for c in checks if not c.passed]


@pytest.mark.parametrize("p,t", PAIRS)
def test_elliptic_orders_are_minimal(p, t):
    g = G(p, t)
    for kind in kinds_for(g):
        for m in stabilizer_restrictions(kind, g)[3:]:
            mt = classify_mobius(m)
            if mt.kind is MobiusKind.ELLIPTIC:
                n = mt.order
                assert (m ** n).is_scalar()
                for q in range(1, n):
                    if n % q == 0:
                        assert not (m ** q).is_scalar()


# -- properties --------------------------------------------------------------


@st.composite
def stabilizer_words(draw):
    p, t = draw(st.sampled_from(PAIRS))
    g = G(p, t)
    kind = draw(st.sampled_from(kinds_for(g)))
    letters = draw(st.lists(st.tuples(st.sampled_from("AB"), st.sampled_from((1, -1))), min_size=1, max_size=6))
    return g, kind, letters


@given(stabilizer_words())
def test_restriction_is_functorial(data):
    g, kind, letters = data
    chart, a, b, ma, mb, _ = stabilizer_restrictions(kind, g)
    iso = g.identity()
    mob = restrict_isometry(iso, chart)
    for name, e in letters:
        x, m = (a, ma) if name == "A" else (b, mb)
        iso = iso @ (x ** e)
        mob = mob @ (m ** e)
    assert restrict_isometry(iso, chart) == mob
    assert mobius_trace_invariant(restrict_isometry(iso, chart)) == mobius_trace_invariant(mob)


@given(stabilizer_words(), st.integers(0, 10**4))
def test_trace_invariant_scalar_invariant(data, k):
    g, kind, letters = data
    _, _, _, ma, mb, _ = stabilizer_restrictions(kind, g)
    m = ma if letters[0][0] == "A" else mb
    lam = g.field.zeta(k) * (k % 7 + 1)
    s = mobius_trace_invariant(m)
    assert mobius_trace_invariant(m.scaled(lam)) == s
    assert s.is_real()
    assert classify_mobius(m.scaled(lam)) == classify_mobius(m)
