"""Planar link diagrams in PD notation.

A crossing ``X(a, b, c, d)`` lists its four arc labels counterclockwise,
starting from the incoming under-strand, so the under-strand runs a -> c.
The crossing is positive when the over-strand runs d -> b and negative
when it runs b -> d.  With this convention the standard right-handed
trefoil has three positive crossings and Jones polynomial
q^2 + q^6 - q^8 (t + t^3 - t^4 with t = q^2).

Orientation is read off the diagram itself: every under-pass fixes the
direction of its strand, and directions propagate along components.
Components that never pass under anything fall back to arc numbering.
Diagrams produced by smoothing crossings carry no orientation at all
(``oriented=False``); only the under-strand position matters for them.
"""

from __future__ import annotations

import re
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Sequence

from .laurent import GaussianInt, parse_gaussian


class DiagramError(ValueError):
    """Malformed or inconsistent diagram."""


Crossing = tuple[int, int, int, int]


@dataclass(frozen=True)
class PDDiagram:
    """A link diagram: crossings plus crossingless unknotted loops."""

    crossings: tuple[Crossing, ...] = ()
    free_loops: int = 0
    oriented: bool = True
    _cache: dict = field(default_factory=dict, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "crossings", tuple(tuple(int(v) for v in x) for x in self.crossings))
        if self.free_loops < 0:
            raise DiagramError("negative free loop count")
        counts: dict[int, int] = defaultdict(int)
        for x in self.crossings:
            if len(x) != 4:
                raise DiagramError(f"crossing {x} does not have four arcs")
            for a in x:
                counts[a] += 1
        for i, x in enumerate(self.crossings):
            for a in x:
                if counts[a] != 2:
                    raise DiagramError(f"arc {a} used {counts[a]} times (crossing {i + 1})")
        if self.oriented:
            _orient(self)

    def __len__(self) -> int:
        return len(self.crossings)

    @property
    def num_crossings(self) -> int:
        return len(self.crossings)

    def arcs(self) -> list[int]:
        return sorted({a for x in self.crossings for a in x})


@dataclass(frozen=True)
class Orientation:
    """Derived orientation data.

    ``over_in[k]`` is the slot (1 or 3) where the over-strand enters
    crossing k; ``components`` lists each component as its arcs in
    travel order.
    """

    over_in: tuple[int, ...]
    components: tuple[tuple[int, ...], ...]
    arc_component: dict[int, int]

    def sign(self, k: int) -> int:
        return 1 if self.over_in[k] == 3 else -1


def _slot_table(crossings: Sequence[Crossing]) -> dict[int, list[tuple[int, int]]]:
    where: dict[int, list[tuple[int, int]]] = defaultdict(list)
    for k, x in enumerate(crossings):
        for p, a in enumerate(x):
            where[a].append((k, p))
    return where


def _other_end(where, arc: int, k: int, p: int) -> tuple[int, int]:
    e0, e1 = where[arc]
    return e1 if e0 == (k, p) else e0


def _orient(d: PDDiagram) -> Orientation:
    if "orient" in d._cache:
        return d._cache["orient"]
    xs = d.crossings
    where = _slot_table(xs)
    over_in = [0] * len(xs)
    seen: set[tuple[int, int]] = set()
    comps: list[tuple[int, ...]] = []
    arc_comp: dict[int, int] = {}

    def walk(k0: int, p0: int) -> None:
        # leave crossing k0 through slot p0 and follow the strand home
        arcs = []
        k, p = k0, p0
        while True:
            seen.add((k, p))
            arc = xs[k][p]
            arcs.append(arc)
            k, p = _other_end(where, arc, k, p)
            seen.add((k, p))
            if p == 2:
                raise DiagramError(
                    f"orientation inconsistency at crossing {k + 1}: under-strand enters at slot c")
            if p in (1, 3):
                over_in[k] = p
            p = (p + 2) % 4
            if (k, p) == (k0, p0):
                break
        idx = len(comps)
        comps.append(tuple(arcs))
        for a in arcs:
            arc_comp[a] = idx

    for k in range(len(xs)):
        if (k, 2) not in seen:
            walk(k, 2)
    # components passing over everything: orient by arc numbering
    for k in range(len(xs)):
        for p in (1, 3):
            if (k, p) in seen:
                continue
            arc, alt = xs[k][p], xs[k][(p + 2) % 4]
            # leaving via slot p travels alt -> arc; prefer increasing labels
            if alt == arc + 1 and arc != alt + 1:
                walk(k, (p + 2) % 4)
            else:
                walk(k, p)
    result = Orientation(tuple(over_in), tuple(comps), arc_comp)
    d._cache["orient"] = result
    return result


def orientation(d: PDDiagram) -> Orientation:
    if not d.oriented:
        raise DiagramError("diagram carries no orientation")
    return _orient(d)


def crossing_signs(d: PDDiagram) -> list[int]:
    o = orientation(d)
    return [o.sign(k) for k in range(len(d.crossings))]


def components(d: PDDiagram) -> list[tuple[int, ...]]:
    """Components with crossings, each as arcs in travel order."""
    if d.oriented:
        return list(_orient(d).components)
    return [tuple(sorted(c)) for c in _unoriented_components(d)]


def _unoriented_components(d: PDDiagram) -> list[set[int]]:
    parent: dict[int, int] = {}

    def find(a: int) -> int:
        while parent.setdefault(a, a) != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for x in d.crossings:
        parent[find(x[0])] = find(x[2])
        parent[find(x[1])] = find(x[3])
    groups: dict[int, set[int]] = defaultdict(set)
    for x in d.crossings:
        for a in x:
            groups[find(a)].add(a)
    return sorted(groups.values(), key=min)


def num_components(d: PDDiagram) -> int:
    if d.oriented:
        return len(_orient(d).components) + d.free_loops
    return len(_unoriented_components(d)) + d.free_loops


def writhe(d: PDDiagram) -> int:
    return sum(crossing_signs(d))


def diagram_stats(d: PDDiagram) -> tuple[int, int, int]:
    """Return (components, writhe, crossings)."""
    return num_components(d), writhe(d), len(d.crossings)


def linking_number(d: PDDiagram, i: int, j: int) -> int:
    """Linking number of components i and j (indices into ``components``)."""
    o = orientation(d)
    total = 0
    for k, x in enumerate(d.crossings):
        ci, cj = o.arc_component[x[0]], o.arc_component[x[1]]
        if {ci, cj} == {i, j} and i != j:
            total += o.sign(k)
    return total // 2


_PD_RE = re.compile(r"\s*PD\s*\[(?P<body>[^\]]*)\]\s*(?:loops\s*=\s*(?P<loops>\d+))?\s*$")
_X_RE = re.compile(r"\s*X\s*\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)\s*")


def parse_pd(text: str, free_loops: int | None = None) -> PDDiagram:
    """Parse ``PD[X(a,b,c,d), ...] loops=k``.

    ``free_loops`` overrides a missing ``loops=`` clause.
    """
    m = _PD_RE.match(text)
    if not m:
        raise DiagramError(f"syntax error: expected 'PD[...]' in {text.strip()!r}")
    body = m.group("body")
    crossings = []
    if body.strip():
        offset = m.start("body")
        pos = 0
        while pos < len(body):
            xm = _X_RE.match(body, pos)
            if not xm:
                raise DiagramError(f"syntax error at offset {offset + pos}: {body[pos:pos + 12]!r}")
            crossings.append(tuple(int(xm.group(i)) for i in range(1, 5)))
            pos = xm.end()
            if pos < len(body):
                if body[pos] != ",":
                    raise DiagramError(f"syntax error at offset {offset + pos}: expected ','")
                pos += 1
    for i, x in enumerate(crossings):
        if min(x) < 1:
            raise DiagramError(f"crossing {i + 1}: arc labels must be positive")
    loops = int(m.group("loops")) if m.group("loops") else (free_loops or 0)
    return PDDiagram(tuple(crossings), loops)


def render_pd(d: PDDiagram) -> str:
    body = ", ".join("X({},{},{},{})".format(*x) for x in d.crossings)
    out = f"PD[{body}]"
    if d.free_loops:
        out += f" loops={d.free_loops}"
    return out


def relabel(crossings: Iterable[Sequence[Hashable]], free_loops: int = 0,
            oriented: bool = True) -> PDDiagram:
    """Build a diagram from arbitrary hashable arc labels.

    Oriented diagrams are renumbered 1, 2, ... consecutively along each
    component; unoriented ones in order of first appearance.
    """
    xs = [tuple(x) for x in crossings]
    first: dict[Hashable, int] = {}
    for x in xs:
        for a in x:
            first.setdefault(a, len(first) + 1)
    provisional = PDDiagram(tuple(tuple(first[a] for a in x) for x in xs), free_loops, oriented)
    return normalize(provisional) if oriented else provisional


def normalize(d: PDDiagram) -> PDDiagram:
    """Renumber arcs consecutively along components (oriented diagrams)."""
    o = orientation(d)
    new: dict[int, int] = {}
    for comp in o.components:
        for a in comp:
            new[a] = len(new) + 1
    xs = tuple(tuple(new[a] for a in x) for x in d.crossings)
    return PDDiagram(xs, d.free_loops, True)


def mirror(d: PDDiagram) -> PDDiagram:
    """Switch every crossing; orientation of strands is preserved."""
    if not d.oriented:
        xs = tuple((x[1], x[2], x[3], x[0]) for x in d.crossings)
        return PDDiagram(xs, d.free_loops, False)
    o = orientation(d)
    out = []
    for k, x in enumerate(d.crossings):
        s = o.over_in[k]
        out.append(tuple(x[(s + i) % 4] for i in range(4)))
    return PDDiagram(tuple(out), d.free_loops, True)


def reverse_component(d: PDDiagram, index: int) -> PDDiagram:
    """Reverse the orientation of one component."""
    o = orientation(d)
    if not 0 <= index < len(o.components):
        raise DiagramError(f"unknown component {index}")
    arcs = o.components[index]
    flip = set(arcs)
    # a component that never passes under is oriented by numbering, so
    # reverse its labels; otherwise rotating its under-passes suffices
    under = any(x[0] in flip for x in d.crossings)
    rename = {} if under else {a: arcs[-1 - i] for i, a in enumerate(arcs)}
    out = []
    for x in d.crossings:
        if x[0] in flip:
            x = (x[2], x[3], x[0], x[1])
        out.append(tuple(rename.get(a, a) for a in x))
    return normalize(PDDiagram(tuple(out), d.free_loops, True))


def disjoint_union(a: PDDiagram, b: PDDiagram) -> PDDiagram:
    shift = max(a.arcs(), default=0)
    xs = a.crossings + tuple(tuple(v + shift for v in x) for x in b.crossings)
    oriented = a.oriented and b.oriented
    d = PDDiagram(xs, a.free_loops + b.free_loops, oriented)
    return normalize(d) if oriented else d


def connected_sum(a: PDDiagram, b: PDDiagram, i: int = 0, j: int = 0) -> PDDiagram:
    """Band-sum component i of a with component j of b, respecting orientation.

    Components are indexed as in ``components`` with free loops last.
    """
    na, nb = num_components(a), num_components(b)
    if not 0 <= i < na:
        raise DiagramError(f"unknown component {i} of first diagram ({na} components)")
    if not 0 <= j < nb:
        raise DiagramError(f"unknown component {j} of second diagram ({nb} components)")
    ca, cb = components(a), components(b)
    # summing with a crossingless loop changes nothing but the loop count
    if i >= len(ca):
        return disjoint_union(PDDiagram(a.crossings, a.free_loops - 1), b)
    if j >= len(cb):
        return disjoint_union(a, PDDiagram(b.crossings, b.free_loops - 1))
    shift = max(a.arcs())
    bx = [tuple(v + shift for v in x) for x in b.crossings]
    ax = [tuple(x) for x in a.crossings]
    x_arc, y_arc = ca[i][0], cb[j][0] + shift
    p_new, r_new = -1, -2
    # the head of an arc is the end sitting at an incoming slot
    out = []
    for src, arc, tail_label, head_label in ((ax, x_arc, p_new, r_new), (bx, y_arc, r_new, p_new)):
        o = orientation(a if src is ax else b)
        for k, x in enumerate(src):
            row = list(x)
            for p in range(4):
                if row[p] != arc:
                    continue
                incoming = p == 0 or p == o.over_in[k]
                row[p] = head_label if incoming else tail_label
            out.append(tuple(row))
    return relabel(out, a.free_loops + b.free_loops, True)


def combine(a: PDDiagram, b: PDDiagram, mode: str = "disjoint_union",
            component_a: int = 0, component_b: int = 0) -> PDDiagram:
    if mode == "disjoint_union":
        return disjoint_union(a, b)
    if mode == "connected_sum":
        return connected_sum(a, b, component_a, component_b)
    raise DiagramError(f"unknown combine mode {mode!r}")


def cable(d: PDDiagram, c: int) -> PDDiagram:
    """0-framed c-cable of a knot diagram.

    Every arc becomes c parallel strands, copy 1 being the leftmost with
    respect to the direction of travel, so each crossing becomes a c x c
    grid.  The blackboard framing equals the writhe w; -w full twists on
    the strands of the last arc bring it to zero.
    """
    if c < 1:
        raise DiagramError("cable index must be positive")
    if num_components(d) != 1:
        raise DiagramError("cabling requires a knot")
    if not d.crossings:
        return PDDiagram((), c)
    o = orientation(d)
    w = sum(o.sign(k) for k in range(len(d.crossings)))
    out: list[tuple] = []
    for t, x in enumerate(d.crossings):
        positive = o.over_in[t] == 3
        # outgoing ends are labelled "out", incoming ends "in"
        west_in = positive

        def vseg(k: int, r: int, t=t, x=x):
            if r == 0:
                return ("in", x[0], k)
            if r == c:
                return ("out", x[2], k)
            return ("V", t, k, r)

        def hseg(j: int, s: int, t=t, x=x, west_in=west_in):
            if s == 0:
                return ("in" if west_in else "out", x[3], j)
            if s == c:
                return ("out" if west_in else "in", x[1], j)
            return ("H", t, j, s)

        for j in range(1, c + 1):
            y = c + 1 - j if positive else j
            for k in range(1, c + 1):
                out.append((vseg(k, y - 1), hseg(j, k), vseg(k, y), hseg(j, k - 1)))

    last = max(d.arcs())
    join = {}
    cur = {p: ("out", last, p) for p in range(1, c + 1)}
    twists = -w if c > 1 else 0
    sign = 1 if twists > 0 else -1
    n = 0
    for _ in range(abs(twists) * c):
        for i in range(1, c):
            l0, r0 = cur[i], cur[i + 1]
            l1, r1 = ("T", n, 0), ("T", n, 1)
            n += 1
            # strands run upward; a positive crossing has the left strand over
            out.append((r0, r1, l1, l0) if sign > 0 else (l0, r0, r1, l1))
            cur[i], cur[i + 1] = l1, r1
    for p in range(1, c + 1):
        join[("in", last, p)] = cur[p]
    for a in d.arcs():
        if a != last:
            for p in range(1, c + 1):
                join[("in", a, p)] = ("out", a, p)
    out = [tuple(join.get(v, v) for v in x) for x in out]
    return relabel(out, 0, True)


def sublink(d: PDDiagram, keep: Iterable[int]) -> PDDiagram:
    """Delete all components not listed in ``keep`` (indices as in ``components``)."""
    o = orientation(d)
    comps = o.components
    keep = set(keep)
    ncross = len(comps)
    loops = sum(1 for i in keep if i >= ncross)
    if any(not 0 <= i < ncross + d.free_loops for i in keep):
        raise DiagramError("unknown component index")
    parent: dict[int, int] = {}

    def find(a: int) -> int:
        while parent.setdefault(a, a) != a:
            a = parent[a]
        return a

    kept = []
    for x in d.crossings:
        under = o.arc_component[x[0]] in keep
        over = o.arc_component[x[1]] in keep
        if under and over:
            kept.append(x)
        elif under:
            parent[find(x[0])] = find(x[2])
        elif over:
            parent[find(x[1])] = find(x[3])
    xs = [tuple(find(a) for a in x) for x in kept]
    present = {o.arc_component[a] for x in kept for a in x}
    loops += sum(1 for i in keep if i < ncross and i not in present)
    return relabel(xs, loops, True) if xs else PDDiagram((), loops)


@dataclass(frozen=True)
class TableEntry:
    name: str
    diagram: PDDiagram
    expected_detV: GaussianInt | None = None
    expected_null: int | None = None
    line: int = 0


def parse_link_table(text: str, source: str = "<table>") -> list[TableEntry]:
    """Parse ``name PD[...] [expected_detV=g] [expected_null=n]`` records."""
    entries = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            name, rest = line.split(None, 1)
            close = rest.index("]")
            pd_text, tail = rest[:close + 1], rest[close + 1:].split()
            loops = None
            extras: dict[str, str] = {}
            for tok in tail:
                key, _, value = tok.partition("=")
                if not value:
                    raise DiagramError(f"malformed field {tok!r}")
                extras[key] = value
            if "loops" in extras:
                loops = int(extras.pop("loops"))
            d = parse_pd(pd_text, free_loops=loops)
            det = extras.pop("expected_detV", None)
            null = extras.pop("expected_null", None)
            if extras:
                raise DiagramError(f"unknown field(s) {sorted(extras)}")
            entries.append(TableEntry(
                name, d,
                parse_gaussian(det) if det is not None else None,
                int(null) if null is not None else None,
                lineno))
        except (ValueError, DiagramError) as exc:
            raise DiagramError(f"{source}:{lineno}: {exc}") from None
    return entries


def bundled_links() -> dict[str, TableEntry]:
    """The link table shipped with the package, keyed by name."""
    from importlib.resources import files
    text = (files("ribbonjones") / "data" / "links.tbl").read_text()
    return {e.name: e for e in parse_link_table(text, "links.tbl")}


def orient(d: PDDiagram, incoming: dict[int, tuple[int, int]] | None = None,
           flips: Iterable[int] = ()) -> PDDiagram:
    """Orient an unoriented diagram.

    Each component is traversed from its smallest arc label.  An entry
    ``incoming[arc] = (k, p)`` demands that ``arc`` enter crossing k at
    slot p; hinted components follow their hints (conflicting hints are
    an error), and components listed in ``flips`` are then reversed.
    Component indices follow ``components(d)``.
    """
    incoming = incoming or {}
    flips = set(flips)
    xs = [list(x) for x in d.crossings]
    where = _slot_table(d.crossings)
    rotate = [False] * len(xs)
    for idx, comp in enumerate(_unoriented_components(d)):
        start = min(comp)
        k0, p0 = where[start][0]
        # travel along `start` away from slot (k0, p0)
        path = []
        k, p = k0, p0
        while True:
            arc = xs[k][p]
            nk, np_ = _other_end(where, arc, k, p)
            path.append((arc, (nk, np_)))
            k, p = nk, (np_ + 2) % 4
            if (k, p) == (k0, p0):
                break
        decided = None
        for arc, end in path:
            if arc in incoming:
                want = incoming[arc]
                if want == end:
                    r = False
                elif want in where[arc]:
                    r = True
                else:
                    raise DiagramError(f"hint for arc {arc} names a slot it does not touch")
                if decided is not None and decided != r:
                    raise DiagramError("inconsistent orientation hints")
                decided = r
        reverse = bool(decided) != (idx in flips)
        for arc, end in path:
            ek, ep = _other_end(where, arc, *end) if reverse else end
            if ep == 2:
                rotate[ek] = True
    out = []
    for k, x in enumerate(xs):
        out.append(tuple(x[2:] + x[:2]) if rotate[k] else tuple(x))
    return normalize(PDDiagram(tuple(out), d.free_loops, True))


class MorseBuilder:
    """Build a diagram row by row from cups, caps and crossings.

    Positions index the strands currently crossing a horizontal line,
    left to right; strands are read top to bottom.  ``cross(p, ...)``
    crosses strands p and p+1: the strand from top-left goes to
    bottom-right (``"x"``) and the one from top-right to bottom-left
    (``"y"``); ``over`` names which of the two is on top.
    """

    def __init__(self) -> None:
        self._next = 0
        self._parent: dict[int, int] = {}
        self.strands: list[int] = []
        self.crossings: list[list[int]] = []
        self.loops = 0
        # piece -> (crossing, slot) where it meets a crossing from above/below
        self.top_end: dict[tuple[int, str], tuple[int, int]] = {}
        self.bottom_end: dict[tuple[int, str], tuple[int, int]] = {}

    def _new(self) -> int:
        self._next += 1
        self._parent[self._next] = self._next
        return self._next

    def find(self, a: int) -> int:
        while self._parent[a] != a:
            self._parent[a] = self._parent[self._parent[a]]
            a = self._parent[a]
        return a

    @property
    def width(self) -> int:
        return len(self.strands)

    def cup(self, p: int) -> tuple[int, int]:
        if not 0 <= p <= self.width:
            raise IndexError(f"cup position {p} out of range")
        a = self._new()
        self.strands[p:p] = [a, a]
        return a, a

    def cap(self, p: int) -> None:
        if not 0 <= p < self.width - 1:
            raise IndexError(f"cap position {p} out of range")
        a, b = self.find(self.strands[p]), self.find(self.strands[p + 1])
        if a == b:
            self.loops += 1
        else:
            self._parent[a] = b
        del self.strands[p:p + 2]

    def cross(self, p: int, over: str) -> int:
        """Add a crossing; returns its index."""
        if not 0 <= p < self.width - 1:
            raise IndexError(f"crossing position {p} out of range")
        tl, tr = self.strands[p], self.strands[p + 1]
        bl, br = self._new(), self._new()
        k = len(self.crossings)
        # slots by corner, not by piece: a cup may feed both top corners
        if over == "y":          # x = TL->BR is under
            self.crossings.append([tl, bl, br, tr])
            slots = {"tl": 0, "bl": 1, "br": 2, "tr": 3}
        elif over == "x":
            self.crossings.append([tr, tl, bl, br])
            slots = {"tr": 0, "tl": 1, "bl": 2, "br": 3}
        else:
            raise ValueError(f"over must be 'x' or 'y', not {over!r}")
        for corner in ("tl", "tr"):
            self.top_end[(k, corner)] = (k, slots[corner])
        for corner in ("bl", "br"):
            self.bottom_end[(k, corner)] = (k, slots[corner])
        self.strands[p], self.strands[p + 1] = bl, br
        return k

    def slot(self, k: int, corner: str) -> int:
        """Slot index of corner ``tl``/``tr``/``bl``/``br`` at crossing k."""
        table = self.top_end if corner in ("tl", "tr") else self.bottom_end
        return table[(k, corner)][1]

    def piece_at(self, k: int, corner: str) -> int:
        return self.crossings[k][self.slot(k, corner)]

    def diagram(self) -> PDDiagram:
        """The finished (unoriented) diagram; all strands must be capped."""
        if self.strands:
            raise ValueError(f"{self.width} strands left open")
        xs = [tuple(self.find(a) for a in x) for x in self.crossings]
        return PDDiagram(tuple(xs), self.loops, False)

    def arc_of(self, piece: int) -> int:
        return self.find(piece)


def from_morse(word: Iterable[tuple], oriented: bool = True) -> PDDiagram:
    """Diagram from ops ``("cup", p)``, ``("cap", p)``, ``("x", p, over)``."""
    b = MorseBuilder()
    for op in word:
        if op[0] == "cup":
            b.cup(op[1])
        elif op[0] == "cap":
            b.cap(op[1])
        elif op[0] == "x":
            b.cross(op[1], op[2])
        else:
            raise ValueError(f"unknown op {op!r}")
    d = b.diagram()
    return orient(d) if oriented else d


def random_morse_word(rng, max_crossings: int = 14, max_width: int = 6) -> list[tuple]:
    """Random cup/cap/crossing word with 1..max_crossings crossings."""
    target = rng.randint(1, max_crossings)
    word: list[tuple] = []
    width = 0
    made = 0
    while made < target:
        choices = []
        if width + 2 <= max_width:
            choices += ["cup"] * (3 if width < 2 else 1)
        if width >= 2:
            choices += ["x"] * 4 + ["cap"]
        op = rng.choice(choices)
        if op == "cup":
            word.append(("cup", rng.randint(0, width)))
            width += 2
        elif op == "cap":
            word.append(("cap", rng.randint(0, width - 2)))
            width -= 2
        else:
            word.append(("x", rng.randint(0, width - 2), rng.choice("xy")))
            made += 1
    while width:
        word.append(("cap", rng.randint(0, width - 2)))
        width -= 2
    return word


def random_diagram(rng, max_crossings: int = 14, max_width: int = 6) -> PDDiagram:
    """A random planar diagram with random over/under information."""
    return from_morse(random_morse_word(rng, max_crossings, max_width))
