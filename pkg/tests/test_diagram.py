import random

import pytest

from ribbonjones.diagram import (DiagramError, PDDiagram, bundled_links, cable, combine,
                                 components, connected_sum, crossing_signs, disjoint_union,
                                 from_morse, linking_number, mirror, num_components, orient,
                                 parse_link_table, parse_pd, random_diagram, render_pd,
                                 reverse_component, sublink, writhe)

LINKS = bundled_links()


def test_table_is_complete():
    assert set(LINKS) == {"H+", "H-", "3_1", "6_1", "8n8", "10n36", "10n57", "whitehead",
                          "4a1", "hopf_sum4"}
    assert [num_components(LINKS[k].diagram) for k in ("3_1", "H+", "10n36", "8n8")] == [1, 2, 2, 4]


def test_hopf_linking_numbers():
    assert linking_number(LINKS["H+"].diagram, 0, 1) == 1
    assert linking_number(LINKS["H-"].diagram, 0, 1) == -1
    assert linking_number(reverse_component(LINKS["H+"].diagram, 1), 0, 1) == -1


@pytest.mark.parametrize("name", sorted(LINKS))
def test_mirror_negates_signs(name):
    d = LINKS[name].diagram
    m = mirror(d)
    assert crossing_signs(m) == [-s for s in crossing_signs(d)]
    # arc labels survive mirroring, component order need not
    where = {frozenset(c): i for i, c in enumerate(components(m))}
    image = [where[frozenset(c)] for c in components(d)]
    n = num_components(d)
    for i in range(n):
        for j in range(i + 1, n):
            assert linking_number(m, image[i], image[j]) == -linking_number(d, i, j)


def test_trefoil_writhe():
    assert writhe(LINKS["3_1"].diagram) == 3


@pytest.mark.parametrize("c", [2, 3])
@pytest.mark.parametrize("name", ["3_1", "6_1"])
def test_cable_is_zero_framed(name, c):
    d = cable(LINKS[name].diagram, c)
    assert num_components(d) == c
    for i in range(c):
        for j in range(i + 1, c):
            assert linking_number(d, i, j) == 0


def test_cable_rejects_links():
    with pytest.raises(DiagramError):
        cable(LINKS["H+"].diagram, 2)


def test_sublink_of_hopf_is_unknot():
    k = sublink(LINKS["H+"].diagram, [0])
    assert k.crossings == () and k.free_loops == 1


def test_sums_count_components():
    a, b = LINKS["H+"].diagram, LINKS["3_1"].diagram
    assert num_components(disjoint_union(a, b)) == 3
    assert num_components(connected_sum(a, b)) == 2
    assert num_components(combine(a, b, "connected_sum")) == 2
    assert len(connected_sum(a, b).crossings) == 5


def test_render_round_trip():
    for e in LINKS.values():
        assert parse_pd(render_pd(e.diagram)) == e.diagram


@pytest.mark.parametrize("text,fragment", [
    ("PD[X(1,2,3)]", "syntax error"),
    ("X(1,2,3,4)", r"expected 'PD\[\.\.\.\]'"),
    ("PD[X(1,1,2,3)]", "used"),
    ("PD[X(0,1,1,0)]", "positive"),
])
def test_parse_errors(text, fragment):
    with pytest.raises(DiagramError, match=fragment):
        parse_pd(text)


def test_table_errors_carry_line():
    with pytest.raises(DiagramError, match="t.tbl:2"):
        parse_link_table("a PD[X(1,2,2,1)]\nb PD[X(1,2,3)]\n", "t.tbl")
    with pytest.raises(DiagramError, match="unknown field"):
        parse_link_table("a PD[X(1,2,2,1)] colour=red")


def test_free_loops():
    d = parse_pd("PD[] loops=3")
    assert num_components(d) == 3 and d.crossings == ()


@pytest.mark.parametrize("seed", range(25))
def test_random_diagrams_are_valid(seed):
    d = random_diagram(random.Random(seed), max_crossings=12)
    assert len(d.crossings) <= 12
    assert isinstance(d, PDDiagram)
    again = orient(PDDiagram(d.crossings, d.free_loops, oriented=False))
    assert num_components(again) == num_components(d)
    assert sorted(len(c) for c in components(d)) == sorted(len(c) for c in components(again))


def test_morse_word_kink():
    # a cup, one crossing of its two strands, and a cap: a one-crossing unknot
    d = from_morse([("cup", 0), ("x", 0, "x"), ("cap", 0)])
    assert num_components(d) == 1 and len(d.crossings) == 1
