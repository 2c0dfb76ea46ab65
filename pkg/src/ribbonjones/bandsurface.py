"""Band diagrams of immersed ribbon surfaces.

A band diagram is read top to bottom as a sequence of rows.  Each row
applies generators to the current left-to-right list of bands; a token
``kind@p`` acts at band position p of the row as it stands when the
token is reached.  The generators are

    cup, cap          birth / death of a band
    split, merge      junctions 1 -> 2 and 2 -> 1
    twist+, twist-    half twist of one band
    xover, xunder     band p crosses over / under band p+1
    sing_lr, sing_rl  ribbon singularity: band p pierces band p+1 / the reverse

Band j of a row carries boundary strands 2j (left edge) and 2j+1 (right
edge).  Each four-crossing tile is drawn as four adjacent strand swaps,
and its crossings are numbered in the order they are drawn: (b,c),
(a,c), (b,d), (a,d), where a, b are the edges of the left band and c, d
those of the right band.  In a singularity the piercing band passes over
the first pierced edge it meets and under the second.
"""

from __future__ import annotations

import re
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .diagram import MorseBuilder, PDDiagram, orient, relabel
from .laurent import QPLUS, GaussianInt, LaurentA, eval_q_i, divmod_laurent
from .jones import jones_polynomial

KINDS = ("cup", "cap", "split", "merge", "twist+", "twist-",
         "xover", "xunder", "sing_lr", "sing_rl")
FOUR_CROSSING = ("xover", "xunder", "sing_lr", "sing_rl")
TWISTS = ("twist+", "twist-")

# over-strand of each drawn swap: "x" = the strand moving right is on top
_TILE_OVER = {
    "xover": ("x", "x", "x", "x"),
    "xunder": ("y", "y", "y", "y"),
    "sing_lr": ("x", "x", "y", "y"),
    "sing_rl": ("y", "x", "y", "x"),
}
_WIDTH_DELTA = {"cup": 1, "cap": -1, "split": 1, "merge": -1}
_SPAN = {"cup": 0, "cap": 1, "split": 1, "merge": 2, "twist+": 1, "twist-": 1,
         "xover": 2, "xunder": 2, "sing_lr": 2, "sing_rl": 2}


class BandError(ValueError):
    """Malformed band diagram or invalid request."""


@dataclass(frozen=True)
class Tile:
    kind: str
    pos: int
    row: int


@dataclass(frozen=True)
class BandDiagram:
    """Rows of generators; ``tiles`` lists them in reading order (site indices)."""

    rows: tuple[tuple[tuple[str, int], ...], ...]

    def __post_init__(self) -> None:
        width = 0
        births = 0
        for r, row in enumerate(self.rows):
            for kind, p in row:
                if kind not in KINDS:
                    raise BandError(f"row {r + 1}: unknown token {kind!r}")
                span = _SPAN[kind]
                hi = width if kind == "cup" else width - span
                if not 0 <= p <= hi:
                    raise BandError(f"row {r + 1}: position {p} out of range for {kind} "
                                    f"(width {width})")
                width += _WIDTH_DELTA.get(kind, 0)
                births += kind == "cup"
        if width != 0:
            raise BandError(f"width mismatch: {width} band(s) left open at the end")
        if births == 0:
            raise BandError("empty surface: no band is ever born")

    @property
    def tiles(self) -> list[Tile]:
        return [Tile(k, p, r) for r, row in enumerate(self.rows) for k, p in row]

    def replace_tile(self, site: int, kind: str) -> BandDiagram:
        rows = [list(row) for row in self.rows]
        n = 0
        for row in rows:
            for j, (k, p) in enumerate(row):
                if n == site:
                    row[j] = (kind, p)
                    return BandDiagram(tuple(tuple(r) for r in rows))
                n += 1
        raise BandError(f"no tile with index {site}")

    def render(self) -> str:
        return "; ".join(" ".join(f"{k}@{p}" for k, p in row) for row in self.rows)


_TOKEN_RE = re.compile(r"^(cup|cap|split|merge|twist\+|twist-|xover|xunder|sing_lr|sing_rl)@(\d+)$")


def parse_band(text: str) -> BandDiagram:
    """Parse the band DSL; ``;`` separates rows and ``#`` starts a comment."""
    body = " ".join(line.split("#", 1)[0] for line in text.splitlines())
    rows = []
    for r, chunk in enumerate(body.split(";")):
        tokens = chunk.split()
        if not tokens:
            continue
        row = []
        for tok in tokens:
            m = _TOKEN_RE.match(tok.replace("twist−", "twist-"))
            if not m:
                raise BandError(f"row {r + 1}: unknown token {tok!r}")
            row.append((m.group(1), int(m.group(2))))
        rows.append(tuple(row))
    if not rows:
        raise BandError("empty band diagram")
    return BandDiagram(tuple(rows))


def from_tokens(tokens: Iterable[tuple[str, int]]) -> BandDiagram:
    """One token per row."""
    return BandDiagram(tuple(((k, p),) for k, p in tokens))


@dataclass(frozen=True)
class CoreEdge:
    start: int
    end: int
    twists: int


@dataclass(frozen=True)
class CoreGraph:
    """Vertices are cup/cap/split/merge tiles; edges are band segments.

    ``sings`` holds (site, piercing edge, pierced edge) per singularity.
    """

    nodes: tuple[int, ...]
    edges: tuple[CoreEdge, ...]
    sings: tuple[tuple[int, int, int], ...]
    node_face: dict[int, int] | None     # None when non-orientable

    def components(self) -> list[set[int]]:
        parent = {v: v for v in self.nodes}

        def find(v: int) -> int:
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for e in self.edges:
            parent[find(e.start)] = find(e.end)
        groups: dict[int, set[int]] = defaultdict(set)
        for v in self.nodes:
            groups[find(v)].add(v)
        return sorted(groups.values(), key=min)

    def euler(self, comp: set[int] | None = None) -> int:
        if comp is None:
            return len(self.nodes) - len(self.edges)
        return len(comp) - sum(1 for e in self.edges if e.start in comp)

    def is_bridge(self, index: int) -> bool:
        e = self.edges[index]
        parent = {v: v for v in self.nodes}

        def find(v: int) -> int:
            while parent[v] != v:
                v = parent[v]
            return v

        for j, f in enumerate(self.edges):
            if j != index:
                parent[find(f.start)] = find(f.end)
        return find(e.start) != find(e.end)


def core_graph(s: BandDiagram) -> CoreGraph:
    nodes: list[int] = []
    edges: list[CoreEdge | None] = []
    sings = []
    row: list[list] = []          # per band: [edge index, start node, twists]

    def open_seg(node: int) -> list:
        edges.append(None)
        return [len(edges) - 1, node, 0]

    def close(seg: list, node: int) -> None:
        edges[seg[0]] = CoreEdge(seg[1], node, seg[2])

    for site, t in enumerate(s.tiles):
        p = t.pos
        if t.kind in ("cup", "cap", "split", "merge"):
            nodes.append(site)
        if t.kind == "cup":
            row.insert(p, open_seg(site))
        elif t.kind == "cap":
            close(row.pop(p), site)
        elif t.kind == "split":
            close(row.pop(p), site)
            row[p:p] = [open_seg(site), open_seg(site)]
        elif t.kind == "merge":
            close(row.pop(p), site)
            close(row.pop(p), site)
            row.insert(p, open_seg(site))
        elif t.kind in TWISTS:
            row[p][2] += 1
        elif t.kind in ("xover", "xunder"):
            row[p], row[p + 1] = row[p + 1], row[p]
        else:
            left, right = row[p], row[p + 1]
            piercing, pierced = (left, right) if t.kind == "sing_lr" else (right, left)
            sings.append((site, piercing[0], pierced[0]))
            row[p], row[p + 1] = right, left
    final = tuple(e for e in edges if e is not None)
    assert len(final) == len(edges)
    return CoreGraph(tuple(nodes), final, tuple(sings), _faces(nodes, final))


def _faces(nodes: Sequence[int], edges: Sequence[CoreEdge]) -> dict[int, int] | None:
    # 2-colour the nodes so that each edge flips colour once per half twist
    adj: dict[int, list[tuple[int, int]]] = defaultdict(list)
    for e in edges:
        adj[e.start].append((e.end, e.twists % 2))
        adj[e.end].append((e.start, e.twists % 2))
    face: dict[int, int] = {}
    for root in nodes:
        if root in face:
            continue
        face[root] = 1
        stack = [root]
        while stack:
            v = stack.pop()
            for w, flip in adj[v]:
                want = -face[v] if flip else face[v]
                if w not in face:
                    face[w] = want
                    stack.append(w)
                elif face[w] != want:
                    return None
    return face


@dataclass(frozen=True)
class SurfaceStats:
    euler: int
    components: int
    deficiency: int
    ribbon_number: int
    essential: int
    orientable: bool

    def render(self) -> str:
        return "\n".join([
            f"euler={self.euler}",
            f"surface_components={self.components}",
            f"deficiency={self.deficiency}",
            f"ribbon_number={self.ribbon_number}",
            f"essential={self.essential}",
            f"orientable={'true' if self.orientable else 'false'}",
        ])


def euler_from_counts(s: BandDiagram) -> int:
    count = defaultdict(int)
    for t in s.tiles:
        count[t.kind] += 1
    num = count["cup"] + count["cap"] - count["split"] - count["merge"]
    if num % 2:
        raise BandError("odd junction count")
    return num // 2


def surface_stats(s: BandDiagram) -> SurfaceStats:
    g = core_graph(s)
    comps = g.components()
    comp_of = {v: i for i, c in enumerate(comps) for v in c}
    chi_comp = [g.euler(c) for c in comps]
    essential = 0
    for _site, piercing, pierced in g.sings:
        pierced_comp = comp_of[g.edges[pierced].start]
        if chi_comp[pierced_comp] == 1 and not g.is_bridge(piercing):
            essential += 1
    chi = g.euler()
    return SurfaceStats(
        euler=chi,
        components=len(comps),
        deficiency=len(comps) - chi,
        ribbon_number=len(g.sings),
        essential=essential,
        orientable=g.node_face is not None,
    )


@dataclass
class _Boundary:
    diagram: PDDiagram                      # unoriented
    tile_crossings: dict[int, list[int]]    # site -> crossing indices
    incoming: dict[int, tuple[int, int]] | None


def _build(s: BandDiagram, kinds: dict[int, str] | None = None) -> _Boundary:
    """Double every band into its two boundary strands.

    ``kinds`` overrides the kind of selected four-crossing tiles.  When
    the surface is orientable, every crossing also yields hints fixing
    the induced orientation: the left edge of a band runs downward
    exactly when the band shows its positive face.
    """
    kinds = kinds or {}
    g = core_graph(s)
    faces = g.node_face
    b = MorseBuilder()
    band_face: list[int] = []
    down: list[bool] = []          # per strand position
    tile_crossings: dict[int, list[int]] = {}
    hints: list[tuple[int, int, int]] = []   # (piece, crossing, slot)

    def cross(pos: int, over: str) -> int:
        k = b.cross(pos, over)
        if faces is not None:
            x_down, y_down = down[pos], down[pos + 1]
            # x runs tl -> br, y runs tr -> bl
            hints.append((b.piece_at(k, "tl" if x_down else "br"), k,
                          b.slot(k, "tl" if x_down else "br")))
            hints.append((b.piece_at(k, "tr" if y_down else "bl"), k,
                          b.slot(k, "tr" if y_down else "bl")))
            down[pos], down[pos + 1] = y_down, x_down
        return k

    for site, t in enumerate(s.tiles):
        p = t.pos
        kind = kinds.get(site, t.kind)
        f = faces.get(site, 1) if faces is not None else 1
        if kind == "cup":
            b.cup(2 * p)
            band_face.insert(p, f)
            down[2 * p:2 * p] = [f == 1, f != 1]
        elif kind == "cap":
            b.cap(2 * p)
            del band_face[p]
            del down[2 * p:2 * p + 2]
        elif kind == "split":
            f = band_face[p]
            b.cup(2 * p + 1)
            band_face.insert(p, f)
            down[2 * p + 1:2 * p + 1] = [f != 1, f == 1]
        elif kind == "merge":
            b.cap(2 * p + 1)
            del band_face[p + 1]
            del down[2 * p + 1:2 * p + 3]
        elif kind in TWISTS:
            k = cross(2 * p, "x" if kind == "twist+" else "y")
            tile_crossings[site] = [k]
            band_face[p] = -band_face[p]
        else:
            base = 2 * p
            over = _TILE_OVER[kind]
            ks = [cross(base + 1, over[0]), cross(base, over[1]),
                  cross(base + 2, over[2]), cross(base + 1, over[3])]
            tile_crossings[site] = ks
            band_face[p], band_face[p + 1] = band_face[p + 1], band_face[p]
    d = b.diagram()
    incoming = None
    if faces is not None:
        incoming = {}
        for piece, k, slot in hints:
            arc = b.arc_of(piece)
            if incoming.setdefault(arc, (k, slot)) != (k, slot):
                raise BandError("induced orientation is inconsistent")
    return _Boundary(d, tile_crossings, incoming)


def boundary_components(s: BandDiagram) -> int:
    d = _build(s).diagram
    from .diagram import num_components
    return num_components(d)


def boundary_diagram(s: BandDiagram) -> PDDiagram:
    """The unoriented boundary; enough for the bracket."""
    return _build(s).diagram


def tile_crossings(s: BandDiagram) -> dict[int, list[int]]:
    """Site -> indices of its crossings in ``boundary_link(s)`` (drawing order)."""
    return _build(s).tile_crossings


def boundary_link(s: BandDiagram, orient_choice: str | Sequence[int] = "induced") -> PDDiagram:
    """The boundary link as an oriented PD diagram.

    ``orient_choice`` is ``"induced"`` (orientable surfaces only), or a
    sequence of +1/-1, one per boundary component that has crossings,
    relative to the traversal order fixed by ``diagram.orient``.
    """
    built = _build(s)
    if isinstance(orient_choice, str):
        if orient_choice != "induced":
            raise BandError(f"unknown orientation choice {orient_choice!r}")
        if built.incoming is None:
            raise BandError("induced orientation requested on a non-orientable surface")
        return orient(built.diagram, incoming=built.incoming)
    flips = [i for i, v in enumerate(orient_choice) if v < 0]
    return orient(built.diagram, flips=flips)


def smooth(d: PDDiagram, choices: dict[int, str]) -> PDDiagram:
    """Smooth the crossings in ``choices`` (index -> "A" or "B"); result is unoriented."""
    parent: dict[int, int] = {}

    def find(a: int) -> int:
        while parent.setdefault(a, a) != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    touched = set()
    for k, letter in choices.items():
        a, b, c, e = d.crossings[k]
        if letter == "A":
            pairs = ((a, b), (c, e))
        elif letter == "B":
            pairs = ((a, e), (b, c))
        else:
            raise BandError(f"smoothing must be A or B, not {letter!r}")
        for u, v in pairs:
            parent[find(u)] = find(v)
            touched.update((u, v))
    rest = [tuple(find(a) for a in x) for k, x in enumerate(d.crossings) if k not in choices]
    alive = {a for x in rest for a in x}
    loops = len({find(a) for a in touched} - alive)
    if not rest:
        return PDDiagram((), d.free_loops + loops, False)
    return relabel(rest, d.free_loops + loops, oriented=False)


def mutate(s: BandDiagram, site: int, kind: str) -> BandDiagram:
    """Apply sing_to_crossing, crossing_change or twist_change at a tile."""
    tiles = s.tiles
    if not 0 <= site < len(tiles):
        raise BandError(f"no tile with index {site}")
    cur = tiles[site].kind
    table = {
        "sing_to_crossing": {"sing_lr": "xover", "sing_rl": "xunder"},
        "crossing_change": {"xover": "xunder", "xunder": "xover"},
        "twist_change": {"twist+": "twist-", "twist-": "twist+"},
    }
    if kind not in table:
        raise BandError(f"unknown mutation {kind!r}")
    if cur not in table[kind]:
        raise BandError(f"{kind} does not apply to a {cur} tile")
    return s.replace_tile(site, table[kind][cur])


def reference_kind(kind: str) -> str:
    """The band crossing a four-crossing tile is compared against."""
    return {"sing_lr": "xover", "sing_rl": "xunder"}.get(kind, kind)


class DivisibilityBreach(ArithmeticError):
    """V(boundary) failed to be divisible by (q + q^-1)^(chi - 1)."""


def divide_qplus(v: LaurentA, power: int) -> LaurentA:
    """Exact division by (q + q^-1)^power; raises DivisibilityBreach otherwise."""
    for _ in range(power):
        v, r = divmod_laurent(v, QPLUS)
        if r:
            raise DivisibilityBreach("polynomial is not divisible by the required power of q + q^-1")
    return v


def surface_determinant(s: BandDiagram, orient_choice: str | Sequence[int] = "induced",
                        engine: str = "auto", stats: SurfaceStats | None = None) -> GaussianInt:
    """[L/S]: V(boundary) / (q + q^-1)^(chi - 1) evaluated at q = i, or 0 if chi <= 0."""
    stats = stats or surface_stats(s)
    if orient_choice == "induced" and not stats.orientable:
        raise BandError("non-orientable surface: an explicit orientation is required")
    if stats.euler <= 0:
        return GaussianInt(0)
    v = jones_polynomial(boundary_link(s, orient_choice), engine)
    return eval_q_i(divide_qplus(v, stats.euler - 1))


# Position i of a pattern word names crossing WORD_ORDER[ref][i] of the tile,
# in drawing order (b,c), (a,c), (b,d), (a,d); ``ref`` is the tile's
# reference band crossing.  The first two positions are the crossings a
# singularity flips.  Recovered by search over all 24 orders, see
# tests/test_patterns.py.
WORD_ORDER = {
    "xover": (3, 2, 1, 0),
    "xunder": (1, 3, 0, 2),
}


def resolve_pattern(s: BandDiagram, site: int, pattern: str,
                    order: Sequence[int] | None = None) -> PDDiagram:
    """Boundary of s with the four crossings at ``site`` smoothed per ``pattern``.

    Letters refer to A/B smoothings of the tile's reference band crossing
    (a singularity is first turned into the crossing in which the piercing
    band passes over), so the geometry is identical for a tile and its
    desingularization.
    """
    tiles = s.tiles
    if not 0 <= site < len(tiles) or tiles[site].kind not in FOUR_CROSSING:
        raise BandError("resolve_pattern needs a four-crossing tile")
    if len(pattern) != 4 or set(pattern) - {"A", "B"}:
        raise BandError("pattern must be a 4-letter word over A and B")
    ref = reference_kind(tiles[site].kind)
    built = _build(s, {site: ref})
    ks = built.tile_crossings[site]
    order = WORD_ORDER[ref] if order is None else order
    return smooth(built.diagram, {ks[order[i]]: pattern[i] for i in range(4)})


def random_band(rng, max_width: int = 4, max_tokens: int = 14, max_crossings: int = 18,
                junctions: bool = True, singularities: bool = True,
                twists: bool = True, junction_weight: float = 1.0) -> BandDiagram:
    """Random band diagram, one token per row, seeded through ``rng``.

    Boundary crossings stay within ``max_crossings`` so the state-sum
    engine remains usable on every sample.  Raising ``junction_weight``
    favours surfaces with cycles in their core graph.
    """
    tokens: list[tuple[str, int]] = []
    width = crossings = 0
    budget = rng.randint(3, max_tokens)
    while len(tokens) < budget:
        options: list[tuple[str, float]] = []
        if width < max_width:
            options.append(("cup", 3.0 if width < 2 else 1.0))
        if width >= 1:
            options.append(("cap", 1.0))
            if twists and crossings + 1 <= max_crossings:
                options += [("twist+", 0.7), ("twist-", 0.7)]
            if junctions and width < max_width:
                options.append(("split", 0.6 * junction_weight))
        if width >= 2:
            if junctions:
                options.append(("merge", 0.8 * junction_weight))
            if crossings + 4 <= max_crossings:
                options += [("xover", 1.0), ("xunder", 1.0)]
                if singularities:
                    options += [("sing_lr", 1.2), ("sing_rl", 1.2)]
        kinds, weights = zip(*options)
        kind = rng.choices(kinds, weights)[0]
        hi = width if kind == "cup" else width - _SPAN[kind]
        tokens.append((kind, rng.randint(0, hi)))
        width += _WIDTH_DELTA.get(kind, 0)
        crossings += 4 if kind in FOUR_CROSSING else 1 if kind in TWISTS else 0
    while width:
        tokens.append(("cap", rng.randint(0, width - 1)))
        width -= 1
    return from_tokens(tokens)


def sites_of(s: BandDiagram, kinds: Iterable[str]) -> list[int]:
    kinds = set(kinds)
    return [i for i, t in enumerate(s.tiles) if t.kind in kinds]


@dataclass(frozen=True)
class BandFile:
    """A band diagram together with its ``#: key=value`` header lines."""

    name: str
    surface: BandDiagram
    meta: dict[str, str] = field(default_factory=dict)

    def orientation(self) -> str | tuple[int, ...]:
        raw = self.meta.get("orient")
        if raw is None:
            return "induced"
        return tuple(int(v) for v in raw.split(","))


def load_band(text: str, name: str = "") -> BandFile:
    meta = {}
    for line in text.splitlines():
        line = line.strip()
        if line.startswith("#:"):
            key, sep, value = line[2:].partition("=")
            if not sep:
                raise BandError(f"malformed header line {line!r}")
            meta[key.strip()] = value.strip()
    return BandFile(name, parse_band(text), meta)


def bundled_surfaces() -> list[BandFile]:
    """The band files shipped in ``ribbonjones/data``, sorted by name."""
    from importlib.resources import files
    out = []
    for entry in sorted((files("ribbonjones") / "data").iterdir(), key=lambda p: p.name):
        if entry.name.endswith(".band"):
            out.append(load_band(entry.read_text(), entry.name[:-5]))
    return out
