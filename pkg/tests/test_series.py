from math import comb

import pytest

from torushomfly import series
from torushomfly.polyalg import LaurentPoly, QSeries, aqt
from torushomfly.series import (CalibrationError, Superpoly, TailError, bps_decompose,
                                check_blowup, check_bps, check_degree_bounds,
                                check_no_cancellation, check_stable, check_symmetry,
                                check_tail, closed_form, qt_dual, raw_exact,
                                raw_hilbert_sum, raw_hilbert_sum_beta, raw_series, run_checks,
                                spp_min, stable_series, superpoly)

ONE = LaurentPoly.one()
A2T = aqt(a=2, t=1)
A2T3 = aqt(a=2, t=3)
TREFOIL = (ONE + A2T) * (aqt(q=-2) + aqt(q=2, t=2) + aqt(a=2, t=3))
PAIRS = [(2, 3), (2, 5), (2, 7), (3, 4), (3, 5), (3, 7), (4, 5), (4, 7), (5, 6), (5, 7)]


def test_raw_sum_examples():
    s = raw_hilbert_sum(2, 3, 2)
    expect = (ONE + A2T) + aqt(q=2) * (ONE + A2T) * (ONE + A2T3) \
        + aqt(q=4) * ((ONE + A2T) * (ONE + A2T3) + aqt(t=2) * (ONE + A2T))
    assert s.order == 6
    assert s.poly == expect
    assert s.poly.coefficient_of("a", 0) == ONE + aqt(q=2) + aqt(q=4) + aqt(q=4, t=2)
    for n, k in [(3, 4), (4, 5)]:
        assert raw_hilbert_sum(n, k, 0).poly == ONE + A2T


def test_beta_sum_examples():
    s = raw_hilbert_sum_beta(2, 3, 1)
    assert s.poly == (ONE + A2T) + aqt(q=2) * (ONE + A2T) * (ONE + A2T3)


def test_beta_sum_reports_first_bad_ideal(monkeypatch):
    monkeypatch.setattr(series, "ideal_weight_beta", lambda j: {(0, 0): 1})
    with pytest.raises(CalibrationError, match="ideal"):
        raw_hilbert_sum_beta(2, 3, 1)


@pytest.mark.parametrize("n,k", [(2, 3), (2, 5), (3, 4), (3, 5), (4, 5)])
def test_exact_form_matches_truncated_sum(n, k):
    sg = series.make_semigroup(n, k)
    L = 2 * sg.delta + n + k
    direct = raw_hilbert_sum(n, k, L)
    assert raw_series(n, k, direct.order).agrees_with(direct)
    assert raw_hilbert_sum_beta(n, k, L).agrees_with(direct)


def test_trefoil():
    S = superpoly(2, 3)
    assert S.spp == TREFOIL
    reduced = aqt(a=2, q=-2) + aqt(a=4, t=3) + aqt(a=2, q=2, t=2)
    assert aqt(a=2) * S.spp == (ONE + A2T) * reduced
    assert spp_min(2, 3) == aqt(q=-2) + aqt(q=2, t=2)
    assert superpoly(3, 2).spp == S.spp


def test_uspp_relation():
    for n, k in [(2, 3), (3, 4), (3, 5)]:
        S = superpoly(n, k)
        assert S.spp * (ONE - aqt(q=2)) == (aqt(q=-1) - aqt(q=1)) * S.uspp_num


@pytest.mark.parametrize("n,k", PAIRS)
def test_cells_and_beta_agree(n, k):
    assert superpoly(n, k, "beta").spp == superpoly(n, k).spp


@pytest.mark.parametrize("n,k", [(2, 5), (3, 4), (3, 5), (4, 5), (4, 7)])
def test_spp_min_counts_semimodules(n, k):
    p = spp_min(n, k)
    assert p.evaluate({"a": 1, "q": 1, "t": 1}) == comb(n + k, n) // (n + k)


def test_method_errors():
    with pytest.raises(ValueError):
        superpoly(2, 3, "nonsense")
    with pytest.raises(ValueError):
        raw_exact(2, 3, "closed")


def test_tail_check():
    check_tail(TREFOIL, 1)
    with pytest.raises(TailError):
        check_tail(TREFOIL * aqt(q=2), 1)


# ---------------------------------------------------------------- structural checks


@pytest.mark.parametrize("n,k", PAIRS)
def test_structural_checks(n, k):
    S = superpoly(n, k)
    for report in run_checks(S):
        assert report.passed, (report.name, report.detail)
    assert check_blowup(n, k)
    assert check_stable(n, k)


def test_negative_controls():
    bad = Superpoly(2, 3, TREFOIL + aqt(q=2), "cells")
    assert not check_symmetry(bad)
    assert not check_bps(bad)
    assert not check_no_cancellation(Superpoly(2, 3, TREFOIL + aqt(t=1), "cells"))
    assert not check_degree_bounds(Superpoly(2, 3, TREFOIL + aqt(q=4), "cells"))


def test_bps_trefoil():
    parts = bps_decompose(superpoly(2, 3))
    assert len(parts) == 2
    assert all(p.degree_range("q") in (None, (0, 0)) for p in parts)


def test_qt_dual_is_involution():
    assert qt_dual(qt_dual(TREFOIL * aqt(q=3))) == TREFOIL * aqt(q=3)


def test_blowup_trefoil_by_hand():
    F, G = raw_exact(2, 3)
    four = ((ONE - aqt(q=2)) * F + G).coefficient_of("a", 4)
    assert four == aqt(q=2, t=4)


# ---------------------------------------------------------------- stable limit


def test_stable_series_examples():
    s = stable_series(2, 6)
    expect = (ONE + A2T) * (ONE + aqt(q=2) * (ONE + A2T3) + aqt(q=4) * (ONE + A2T3 + aqt(t=2)))
    assert s.poly == expect.truncate("q", 6)
    one = stable_series(1, 8)
    assert one.poly == ((ONE + A2T) * QSeries.geometric(aqt(q=2), 8).poly).truncate("q", 8)
    # a = 0, t = 1: 1 / prod (1 - q^(2i))
    p = stable_series(3, 10).poly.coefficient_of("a", 0).substitute({"t": 1})
    expect = QSeries(ONE, 10)
    for i in (1, 2, 3):
        expect = expect * QSeries.geometric(aqt(q=2 * i), 10)
    assert p == expect.poly


# ---------------------------------------------------------------- closed forms


def test_closed_forms():
    for kk in range(1, 5):
        k = 2 * kk + 1
        assert closed_form(2, k).spp == superpoly(2, k).spp
    for kk in range(1, 3):
        for r in (1, 2):
            k = 3 * kk + r
            assert closed_form(3, k).spp == superpoly(3, k).spp
    assert superpoly(3, 4, "closed").spp == superpoly(3, 4).spp
    with pytest.raises(ValueError):
        closed_form(4, 5)


def test_closed_form_homfly_level():
    cf = closed_form(2, 5).spp.substitute({"t": -1})
    assert cf == superpoly(2, 5).spp.substitute({"t": -1})
