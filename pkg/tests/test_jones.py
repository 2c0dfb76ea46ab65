import itertools
import random

import pytest

from ribbonjones.diagram import (bundled_links, disjoint_union, mirror, parse_pd, random_diagram,
                                 sublink)
from ribbonjones.jones import (EngineError, bracket, bracket_statesum, bracket_sweep,
                               greedy_order, jones_polynomial, jones_profile, reduce_jones)
from ribbonjones.laurent import (QPLUS, GaussianInt, LaurentA, eval_q_1, eval_q_i,
                                 parse_laurent)

LINKS = bundled_links()


def naive_bracket(d):
    """Test-owned state sum: every state, loops counted by a fresh union-find."""
    total = LaurentA()
    delta = LaurentA({2: -1, -2: -1})
    for state in itertools.product((0, 1), repeat=len(d.crossings)):
        parent = {}

        def find(a):
            parent.setdefault(a, a)
            while parent[a] != a:
                a = parent[a]
            return a

        for bit, (a, b, c, e) in zip(state, d.crossings):
            pairs = ((a, b), (c, e)) if bit == 0 else ((a, e), (b, c))
            for u, v in pairs:
                parent[find(u)] = find(v)
        arcs = {a for x in d.crossings for a in x}
        loops = len({find(a) for a in arcs}) + d.free_loops
        weight = LaurentA({state.count(0) - state.count(1): 1})
        total = total + weight * delta ** (loops - 1)
    return total


@pytest.mark.parametrize("seed", range(40))
def test_engines_agree_with_naive_oracle(seed):
    d = random_diagram(random.Random(seed), max_crossings=9)
    ref = naive_bracket(d)
    assert bracket_statesum(d) == ref
    assert bracket_sweep(d) == ref
    order = list(range(len(d.crossings)))
    random.Random(seed + 1).shuffle(order)
    assert bracket_sweep(d, order) == ref


@pytest.mark.parametrize("n", range(1, 6))
def test_trivial_links(n):
    d = parse_pd(f"PD[] loops={n}")
    assert jones_polynomial(d) == QPLUS ** (n - 1)


def test_kinked_unknot():
    assert jones_polynomial(parse_pd("PD[X(1,1,2,2)]")) == 1
    assert jones_polynomial(parse_pd("PD[X(2,1,1,2)]")) == 1


@pytest.mark.parametrize("name", sorted(LINKS))
def test_mirror_inverts_q(name):
    d = LINKS[name].diagram
    assert jones_polynomial(mirror(d)) == jones_polynomial(d).substitute_inverse()


def test_hopf_links_are_mirrors():
    assert jones_polynomial(LINKS["H-"].diagram) == \
        jones_polynomial(LINKS["H+"].diagram).substitute_inverse()


@pytest.mark.parametrize("name", sorted(LINKS))
def test_value_at_one(name):
    d = LINKS[name].diagram
    n = jones_profile(d).components
    assert eval_q_1(jones_polynomial(d)) == 2 ** (n - 1)


def test_split_union_multiplies_by_loop_value():
    a, b = LINKS["3_1"].diagram, LINKS["H+"].diagram
    assert jones_polynomial(disjoint_union(a, b)) == \
        jones_polynomial(a) * jones_polynomial(b) * QPLUS


PRINTED = {
    "8n8": "q^6 - q^4 + 2*q^2 + 2*q^-2 - q^-4 + q^-6",
    "10n36": "-q^8 + 2*q^6 - 3*q^4 + 4*q^2 - 3 + 4*q^-2 - 3*q^-4 + 2*q^-6 - q^-8",
    "10n57": "q^6 - 2*q^4 + 2*q^2 - 2 + 3*q^-2 - 2*q^-4 + 2*q^-6 - q^-8",
}


@pytest.mark.parametrize("name", sorted(PRINTED))
def test_printed_factorisations(name):
    assert jones_polynomial(LINKS[name].diagram) == QPLUS * parse_laurent(PRINTED[name])


def test_table_expectations():
    for name, e in LINKS.items():
        r = jones_profile(e.diagram, name)
        if e.expected_null is not None:
            assert r.nullity == e.expected_null, name
        if e.expected_detV is not None:
            value = r.jones_det if r.jones_det is not None else r.det_at_i
            assert value == e.expected_detV, name


def test_ribbon_link_components():
    d = LINKS["10n36"].diagram
    dets = sorted(eval_q_i(jones_polynomial(sublink(d, [i]))).re for i in range(2))
    assert dets == [1, 9]
    # both components of 10n57 are trivial
    d = LINKS["10n57"].diagram
    assert all(jones_polynomial(sublink(d, [i])) == 1 for i in range(2))


def test_reduce_jones_divisibility_flag():
    v = QPLUS * LaurentA.from_q({2: 1, 0: 1, -2: 1})
    assert reduce_jones(v, 2) == (1, LaurentA.from_q({2: 1, 0: 1, -2: 1}), True)
    assert reduce_jones(v, 3)[2] is False


def test_profile_series():
    r = jones_profile(LINKS["10n36"].diagram, "10n36")
    assert r.d_series[0] == 0 and r.d_series[1] == GaussianInt(0, -23)
    assert r.v_series[0] == 2


def test_engine_selection():
    d = LINKS["3_1"].diagram
    assert bracket(d, "auto") == bracket(d, "statesum") == bracket(d, "sweep")
    with pytest.raises(EngineError):
        bracket(d, "magic")
    with pytest.raises(EngineError):
        bracket_statesum(d, cap=2)


def test_greedy_order_is_a_permutation():
    d = LINKS["10n57"].diagram
    assert sorted(greedy_order(d)) == list(range(len(d.crossings)))
