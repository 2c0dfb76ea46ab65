"""The thirteen acceptance criteria, each timed against its runtime budget.

Run alone with ``pytest tests/test_acceptance.py``; the terminal summary
prints one PASS/FAIL line per criterion.
"""

import sys
import time
from contextlib import contextmanager

import pytest

from ribbonjones import theorems as th
from ribbonjones.bandsurface import bundled_surfaces, surface_determinant, surface_stats
from ribbonjones.diagram import bundled_links, cable, parse_pd, sublink
from ribbonjones.jones import jones_polynomial, jones_profile
from ribbonjones.laurent import QPLUS, GaussianInt, LaurentA, eval_q_1, eval_q_i, parse_laurent

LINKS = bundled_links()
SURFACES = {b.name: b for b in bundled_surfaces()}


@contextmanager
def budget(seconds):
    start = time.perf_counter()
    yield
    elapsed = time.perf_counter() - start
    assert elapsed < seconds, f"took {elapsed:.1f}s, budget {seconds}s"


def q(terms):
    return LaurentA.from_q(terms)


@pytest.mark.criterion(1, "trivial links", 1)
def test_trivial_links():
    with budget(1):
        for n in range(1, 6):
            assert jones_polynomial(parse_pd(f"PD[] loops={n}")) == QPLUS ** (n - 1)


@pytest.mark.criterion(2, "value at q=1 and nullity bound", 5)
def test_value_at_one():
    with budget(5):
        for name, e in LINKS.items():
            r = jones_profile(e.diagram, name, order=0)
            assert eval_q_1(jones_polynomial(e.diagram)) == 2 ** (r.components - 1), name
            assert r.nullity <= r.components - 1, name


@pytest.mark.criterion(3, "8n8 factorisation", 5)
def test_8n8():
    with budget(5):
        v = jones_polynomial(LINKS["8n8"].diagram)
        assert v == QPLUS * parse_laurent("q^6 - q^4 + 2*q^2 + 2*q^-2 - q^-4 + q^-6")
        assert jones_profile(LINKS["8n8"].diagram, order=0).nullity == 1


@pytest.mark.criterion(4, "four Hopf links summed", 5)
def test_hopf_sum4():
    with budget(5):
        d = LINKS["hopf_sum4"].diagram
        assert jones_polynomial(d) == q({1: 1, 5: 1}) ** 2 * q({-1: 1, -5: 1}) ** 2
        r = jones_profile(d, order=0)
        assert r.nullity == 0 and r.det_at_i == 16


@pytest.mark.criterion(5, "10n36 and mod 32", 10)
def test_10n36():
    with budget(10):
        d = LINKS["10n36"].diagram
        printed = "-q^8 + 2*q^6 - 3*q^4 + 4*q^2 - 3 + 4*q^-2 - 3*q^-4 + 2*q^-6 - q^-8"
        assert jones_polynomial(d) == QPLUS * parse_laurent(printed)
        det = jones_profile(d, order=0).jones_det
        assert det == -23
        knots = sorted(eval_q_i(jones_polynomial(sublink(d, [i]))).re for i in range(2))
        assert knots == [1, 9]
        assert (det.re - 9) % 32 == 0


@pytest.mark.criterion(6, "10n57 determinant", 10)
def test_10n57():
    with budget(10):
        det = jones_profile(LINKS["10n57"].diagram, order=0).jones_det
        assert det == -15
        assert (det.re - 1) % 16 == 0 and (det.re - 1) % 32 != 0


@pytest.mark.criterion(7, "stevedore cables, 2-cable within 30s and 3-cable within 300s", 330)
def test_stevedore_cables():
    with budget(1):
        assert jones_profile(LINKS["6_1"].diagram, order=0).det_at_i == 9
    with budget(30):
        r2 = jones_profile(cable(LINKS["6_1"].diagram, 2), engine="sweep", order=0)
        assert r2.jones_det == 49
    with budget(300):
        r3 = jones_profile(cable(LINKS["6_1"].diagram, 3), engine="sweep", order=0)
        assert r3.jones_det == 1785


@pytest.mark.criterion(8, "determinants of links and band surfaces", 5)
def test_determinants():
    with budget(5):
        for name, value in (("H+", GaussianInt(0, 2)), ("H-", GaussianInt(0, -2)),
                            ("whitehead", GaussianInt(0, 8))):
            assert eval_q_i(jones_polynomial(LINKS[name].diagram)) == value
        hs = SURFACES["hopf_sum2"]
        assert surface_determinant(hs.surface) == 4
        mb = SURFACES["mobius_4a1"]
        assert surface_determinant(mb.surface, mb.orientation()) == GaussianInt(0, -4)


@pytest.mark.criterion(9, "sweep engine equals state sum", 120)
def test_oracle():
    with budget(120):
        out = th.check_oracle(trials=500, seed=0, max_crossings=14, bundled=True)
        assert out.passed, out.render()
        assert out.trials >= 500 + len(th._bundled_diagrams(18))


@pytest.mark.criterion(10, "identity suites, 100 contexts each", 300)
def test_identities():
    with budget(300):
        outcomes = th.identity_suite(trials=100, seed=0)
        assert [o.name for o in outcomes] == list(th.KINDS)
        for o in outcomes:
            assert o.passed and o.trials == 100, o.render()


@pytest.mark.criterion(11, "congruences by deficiency and mod 32", 600)
def test_congruences():
    with budget(600):
        corpus = [b.surface for b in bundled_surfaces()]
        out = th.check_congruences(corpus, trials=50, seed=0)
        assert out.passed, out.render()
        assert out.counts["case_d1"] >= 50 and out.counts["case_d2plus"] >= 50
        # every d=0 surface is a union of disks; 50 random plus 50 reshuffled
        assert out.counts["case_d0"] >= 100
        assert out.counts.get("mod32_defect_nonzero", 0) > 0


@pytest.mark.criterion(12, "Seifert cross-validation", 10)
def test_seifert():
    with budget(10):
        out = th.check_seifert(trials=0)
        assert out.passed and out.trials == len(LINKS), out.render()


@pytest.mark.criterion(13, "finite type sums and the d_k bridge", 600)
def test_finite_type():
    with budget(600):
        ft, bridge = th.finite_type_suites(trials=50, seed=0)
        assert ft.passed and ft.trials == 50, ft.render()
        assert ft.counts.get("nonzero_sum") == 50 and "vacuous" not in ft.counts
        assert all(ft.counts.get(f"size_{k}") for k in (1, 2, 3))
        assert bridge.passed and bridge.trials >= 4, bridge.render()
        for b in bundled_surfaces():
            st = surface_stats(b.surface)
            if st.orientable and st.euler >= 1:
                assert th.check_dk_bridge(b.surface, name=b.name).passed


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
