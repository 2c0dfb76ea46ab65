import math
import random
from fractions import Fraction

import pytest

from ribbonjones.diagram import bundled_links, parse_pd, random_diagram
from ribbonjones.jones import jones_polynomial, jones_profile
from ribbonjones.laurent import GaussianInt, LaurentA, eval_q_i, i_power
from ribbonjones.seifert import (SeifertMatrix, alexander, braid_closure, collins_matrix,
                                 seifert_matrix, signature_nullity)

LINKS = bundled_links()


def charpoly(m):
    """Faddeev-LeVerrier: coefficients c_0..c_n of det(tI - m), highest first."""
    n = len(m)
    ident = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    mk = [[Fraction(0)] * n for _ in range(n)]
    coeffs = [Fraction(1)]
    for k in range(1, n + 1):
        mk = [[sum(m[i][r] * mk[r][j] for r in range(n)) + coeffs[-1] * ident[i][j]
               for j in range(n)] for i in range(n)]
        am = [[sum(m[i][r] * mk[r][j] for r in range(n)) for j in range(n)] for i in range(n)]
        coeffs.append(-sum(am[i][i] for i in range(n)) / k)
    return coeffs


def oracle_signature(theta):
    """Real-rooted characteristic polynomial: Descartes counts the positive eigenvalues."""
    n = len(theta)
    sym = [[theta[i][j] + theta[j][i] for j in range(n)] for i in range(n)]
    c = charpoly(sym)
    while c and c[-1] == 0:
        c.pop()
    zero = n + 1 - len(c)

    def changes(seq):
        s = [x for x in seq if x]
        return sum(1 for a, b in zip(s, s[1:]) if (a > 0) != (b > 0))

    pos = changes(c)
    neg = changes([x * (-1) ** (len(c) - 1 - i) for i, x in enumerate(c)])
    return pos - neg, zero


def test_unknot_is_empty():
    m = seifert_matrix(parse_pd("PD[] loops=1"))
    assert m.size == 0
    assert alexander(m) == 1
    assert signature_nullity(m) == (0, 0, GaussianInt(1))


def test_hopf_plus():
    m = seifert_matrix(LINKS["H+"].diagram)
    assert alexander(m) == LaurentA.from_q({1: 1, -1: -1})
    assert signature_nullity(m) == (-1, 0, GaussianInt(0, 2))


def test_right_trefoil():
    m = seifert_matrix(LINKS["3_1"].diagram)
    assert alexander(m) == LaurentA.from_q({2: 1, 0: -1, -2: 1})
    assert signature_nullity(m) == (-2, 0, GaussianInt(-3))


@pytest.mark.parametrize("name", sorted(LINKS))
def test_alexander_and_jones_agree_at_i(name):
    d = LINKS[name].diagram
    m = seifert_matrix(d)
    v_at_i = eval_q_i(jones_polynomial(d))
    assert eval_q_i(alexander(m)) == v_at_i
    sig, null, det = signature_nullity(m)
    assert det == v_at_i
    if not m.split:
        assert (sig, null) == oracle_signature(m.entries)
    if det != 0:
        assert det == i_power(-sig) * math.isqrt(det.norm())


def test_ribbon_nullity():
    for name in ("10n36", "10n57"):
        d = LINKS[name].diagram
        n = jones_profile(d).components
        assert signature_nullity(seifert_matrix(d))[1] == n - 1 == jones_profile(d).nullity


def test_knot_determinants_are_one_mod_four():
    for name in ("3_1", "6_1", "4a1"):
        det = signature_nullity(seifert_matrix(LINKS[name].diagram))[2]
        if det.im == 0:
            assert det.re % 4 == 1


def test_split_link_has_zero_alexander():
    d = parse_pd("PD[X(1,4,2,3), X(3,2,4,1)] loops=1")
    m = seifert_matrix(d)
    assert m.split and alexander(m) == 0


@pytest.mark.parametrize("seed", range(15))
def test_random_diagrams(seed):
    d = random_diagram(random.Random(seed), max_crossings=10)
    m = seifert_matrix(d)
    sig, null, det = signature_nullity(m)
    assert det == eval_q_i(jones_polynomial(d)) == eval_q_i(alexander(m))
    if not m.split:
        assert (sig, null) == oracle_signature(m.entries)


@pytest.mark.parametrize("seed", range(15))
def test_collins_matches_seifert_algorithm(seed):
    rng = random.Random(seed)
    strands = rng.randint(2, 4)
    word = [(rng.randrange(strands - 1), rng.choice((1, -1))) for _ in range(rng.randint(1, 9))]
    d = braid_closure(word, strands)
    a = SeifertMatrix(tuple(map(tuple, collins_matrix(word))))
    b = seifert_matrix(d)
    if b.split:
        return
    assert alexander(a) == alexander(b)
    assert signature_nullity(a) == signature_nullity(b)
    assert eval_q_i(alexander(a)) == eval_q_i(jones_polynomial(d))


def test_render_lists_rows():
    text = seifert_matrix(LINKS["3_1"].diagram).render()
    assert text.startswith("[[") and text.count("[") == 3
