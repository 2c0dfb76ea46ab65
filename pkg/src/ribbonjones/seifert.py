"""Seifert matrices, the Alexander polynomial, signature and nullity.

The diagram is first isotoped into a closed braid by Vogel's moves: as
long as some face of the diagram sees two different Seifert circles
running the same way around it, push one of them across the other by a
Reidemeister II finger move.  When no such face is left the Seifert
circles are concentric and coherently oriented, and the crossings can be
read off as a braid word.  The matrix is then Collins' Seifert matrix of
the braid closure.

Diagrams whose projection falls into several pieces (including
crossingless loops) get one block per piece, joined by tubes: each tube
adds a zero row and column.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .diagram import PDDiagram, orientation
from .laurent import GaussianInt, LaurentA, i_power

MAX_VOGEL_MOVES = 10_000


class SeifertError(ValueError):
    pass


class _Work:
    """Mutable copy of an oriented diagram: crossings plus over-in slots."""

    def __init__(self, crossings: Sequence[Sequence[int]], over_in: Sequence[int]):
        self.xs = [list(x) for x in crossings]
        self.ob = list(over_in)
        self.next_label = max((a for x in self.xs for a in x), default=0) + 1

    def fresh(self) -> int:
        self.next_label += 1
        return self.next_label - 1

    def sign(self, k: int) -> int:
        return 1 if self.ob[k] == 3 else -1

    def out_slots(self, k: int) -> tuple[int, int]:
        """(under-out, over-out) slots of crossing k."""
        return 2, 4 - self.ob[k]

    def ends(self) -> tuple[dict[int, tuple[int, int]], dict[int, tuple[int, int]]]:
        """tail[arc] = (k, slot) it leaves from, head[arc] = (k, slot) it enters."""
        tail, head = {}, {}
        for k, x in enumerate(self.xs):
            u_out, o_out = self.out_slots(k)
            for p, a in enumerate(x):
                if p in (u_out, o_out):
                    tail[a] = (k, p)
                else:
                    head[a] = (k, p)
        return tail, head

    def circles(self) -> tuple[list[list[int]], dict[int, int]]:
        """Seifert circles as arc lists in travel order, and arc -> circle."""
        tail, head = self.ends()
        circle_of: dict[int, int] = {}
        circles: list[list[int]] = []
        for start in sorted(tail):
            if start in circle_of:
                continue
            arcs = []
            a = start
            while a not in circle_of:
                circle_of[a] = len(circles)
                arcs.append(a)
                k, p = head[a]
                u_out, o_out = self.out_slots(k)
                # the smoothing turns onto the other strand's outgoing arc
                a = self.xs[k][o_out if p == 0 else u_out]
            circles.append(arcs)
        return circles, circle_of

    def faces(self) -> list[list[tuple[int, bool]]]:
        """Faces as lists of (arc, forward); each face lies left of its walk."""
        tail, _ = self.ends()
        where: dict[int, list[tuple[int, int]]] = defaultdict(list)
        for k, x in enumerate(self.xs):
            for p, a in enumerate(x):
                where[a].append((k, p))
        used = set()
        faces = []
        for k, x in enumerate(self.xs):
            for p in range(4):
                if (k, p) in used:
                    continue
                face = []
                ck, cp = k, p
                while (ck, cp) not in used:
                    used.add((ck, cp))
                    a = self.xs[ck][cp]
                    face.append((a, tail[a] == (ck, cp)))
                    e0, e1 = where[a]
                    nk, np_ = e1 if e0 == (ck, cp) else e0
                    ck, cp = nk, (np_ - 1) % 4
                faces.append(face)
        return faces

    def finger(self, x: int, y: int, face_left: bool) -> None:
        """Push arc y under arc x, creating two crossings."""
        tail, head = self.ends()
        x1, xm, x2 = x, self.fresh(), self.fresh()
        y1, ym, y2 = y, self.fresh(), self.fresh()
        hk, hp = head[x]
        self.xs[hk][hp] = x2
        hk, hp = head[y]
        self.xs[hk][hp] = y2
        if face_left:
            self.xs.append([ym, xm, y2, x1])
            self.ob.append(3)
            self.xs.append([y1, xm, ym, x2])
            self.ob.append(1)
        else:
            self.xs.append([ym, x1, y2, xm])
            self.ob.append(1)
            self.xs.append([y1, x2, ym, xm])
            self.ob.append(3)

    def defect(self) -> tuple[int, int, bool] | None:
        _, circle_of = self.circles()
        for face in self.faces():
            for i, (a, fa) in enumerate(face):
                for b, fb in face[i + 1:]:
                    if fa == fb and circle_of[a] != circle_of[b]:
                        return a, b, fa
        return None

    def braid(self) -> None:
        for _ in range(MAX_VOGEL_MOVES):
            found = self.defect()
            if found is None:
                return
            self.finger(*found)
        raise SeifertError("Vogel moves did not terminate")

    def braid_word(self) -> list[tuple[int, int]]:
        """Read the braided diagram as a list of (generator index, sign)."""
        self.braid()
        circles, circle_of = self.circles()
        _, head = self.ends()
        adj: dict[int, set[int]] = defaultdict(set)
        pair: dict[int, tuple[int, int]] = {}
        for k, x in enumerate(self.xs):
            c1, c2 = circle_of[x[0]], circle_of[x[self.ob[k]]]
            if c1 == c2:
                raise SeifertError("crossing joins a Seifert circle to itself")
            adj[c1].add(c2)
            adj[c2].add(c1)
            pair[k] = (c1, c2)
        ends = [c for c in range(len(circles)) if len(adj[c]) <= 1]
        order = [min(ends)]
        while len(order) < len(circles):
            nxt = [c for c in adj[order[-1]] if c not in order]
            if len(nxt) != 1:
                raise SeifertError("Seifert circles are not nested like a braid")
            order.append(nxt[0])
        level = {c: i for i, c in enumerate(order)}
        seqs = {c: [head[a][0] for a in circles[c]] for c in order}
        # align the cut points: each circle starts at the first crossing it
        # shares with the previous circle, counted from that circle's start
        for prev, cur in zip(order, order[1:]):
            shared = [k for k in seqs[prev] if cur in pair[k]]
            first = seqs[cur].index(shared[0])
            seqs[cur] = seqs[cur][first:] + seqs[cur][:first]
        preds: dict[int, set[int]] = defaultdict(set)
        for seq in seqs.values():
            for a, b in zip(seq, seq[1:]):
                preds[b].add(a)
        done: list[int] = []
        placed: set[int] = set()
        remaining = set(range(len(self.xs)))
        while remaining:
            ready = sorted(k for k in remaining if preds[k] <= placed)
            if not ready:
                raise SeifertError("crossing order along the circles is cyclic")
            k = ready[0]
            done.append(k)
            placed.add(k)
            remaining.discard(k)
        return [(min(level[c] for c in pair[k]), self.sign(k)) for k in done]


def collins_matrix(word: Sequence[tuple[int, int]]) -> list[list[int]]:
    """Seifert matrix of a braid closure (Collins' algorithm).

    ``word`` lists (generator index, sign).  Homology generators are the
    loops between consecutive crossings on the same pair of strands.
    """
    times: dict[int, list[int]] = defaultdict(list)
    for t, (i, _) in enumerate(word):
        times[i].append(t)
    gens = []            # (pair, start time, end time)
    index: dict[tuple[int, int], int] = {}
    for i in sorted(times):
        ts = times[i]
        for a, b in zip(ts, ts[1:]):
            index[(i, a)] = len(gens)
            gens.append((i, a, b))
    sign = [s for _, s in word]
    m = [[0] * len(gens) for _ in gens]
    for g, (i, a, b) in enumerate(gens):
        if sign[a] == sign[b]:
            m[g][g] = -sign[a]
        nxt = index.get((i, b))
        if nxt is not None:
            if sign[b] > 0:
                m[nxt][g] = 1
            else:
                m[g][nxt] = -1
        for h, (j, c, d) in enumerate(gens):
            if j != i + 1:
                continue
            if c < a < d < b:
                m[h][g] = 1
            elif a < c < b < d:
                m[h][g] = -1
    return m


def braid_closure(word: Sequence[tuple[int, int]], strands: int | None = None) -> PDDiagram:
    """Oriented PD diagram of the closure of a braid word (index, sign)."""
    from .diagram import MorseBuilder, orient
    n = strands if strands is not None else max((i for i, _ in word), default=-1) + 2
    b = MorseBuilder()
    for i in range(n):
        b.cup(i)
    hints: dict[int, tuple[int, int]] = {}
    for i, s in word:
        # braid strands run downwards; "y" over gives a positive crossing
        k = b.cross(i, "y" if s > 0 else "x")
        for corner in ("tl", "tr"):
            hints[b.arc_of(b.piece_at(k, corner))] = (k, b.slot(k, corner))
    for i in reversed(range(n)):
        b.cap(i)
    return orient(b.diagram(), incoming=hints)


@dataclass(frozen=True)
class SeifertMatrix:
    """Integer matrix theta; ``pieces`` counts the projection pieces tubed together."""

    entries: tuple[tuple[int, ...], ...]
    pieces: int = 1

    @property
    def size(self) -> int:
        return len(self.entries)

    @property
    def split(self) -> bool:
        return self.pieces > 1

    def render(self) -> str:
        return "[" + ", ".join("[" + ", ".join(map(str, r)) + "]" for r in self.entries) + "]"


def _pieces(d: PDDiagram) -> list[list[int]]:
    parent = list(range(len(d.crossings)))

    def find(k: int) -> int:
        while parent[k] != k:
            parent[k] = parent[parent[k]]
            k = parent[k]
        return k

    first: dict[int, int] = {}
    for k, x in enumerate(d.crossings):
        for a in x:
            if a in first:
                parent[find(k)] = find(first[a])
            else:
                first[a] = k
    groups: dict[int, list[int]] = defaultdict(list)
    for k in range(len(d.crossings)):
        groups[find(k)].append(k)
    return sorted(groups.values())


def seifert_matrix(d: PDDiagram) -> SeifertMatrix:
    if not d.oriented:
        raise SeifertError("Seifert's algorithm needs an oriented diagram")
    o = orientation(d)
    blocks = []
    pieces = _pieces(d)
    for ks in pieces:
        work = _Work([d.crossings[k] for k in ks], [o.over_in[k] for k in ks])
        blocks.append(collins_matrix(work.braid_word()))
    count = len(pieces) + d.free_loops
    size = sum(len(b) for b in blocks) + max(count - 1, 0)
    rows = [[0] * size for _ in range(size)]
    at = 0
    for blk in blocks:
        for i, r in enumerate(blk):
            rows[at + i][at:at + len(r)] = r
        at += len(blk)
    return SeifertMatrix(tuple(tuple(r) for r in rows), max(count, 1))


def _det(m: Sequence[Sequence[int]]) -> int:
    """Integer determinant by Bareiss elimination."""
    a = [list(r) for r in m]
    n = len(a)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1] if n else 1


def alexander(m: SeifertMatrix) -> LaurentA:
    """det(q^-1 theta^T - q theta), returned in A-form."""
    theta = m.entries
    g = len(theta)
    # P(t) = det(theta^T - t theta) has degree <= g; interpolate it
    values = []
    for t in range(g + 1):
        values.append(_det([[theta[j][i] - t * theta[i][j] for j in range(g)] for i in range(g)]))
    coeffs = [Fraction(0)] * (g + 1)
    for i, yi in enumerate(values):
        basis = [Fraction(1)]
        denom = 1
        for j in range(g + 1):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for p in range(len(basis) - 1):
                basis[p] -= j * basis[p + 1]
            denom *= i - j
        for p, c in enumerate(basis):
            coeffs[p] += c * yi / denom
    q_terms = {}
    for p, c in enumerate(coeffs):
        if c:
            if c.denominator != 1:
                raise SeifertError("non-integral Alexander coefficient")
            q_terms[2 * p - g] = int(c)
    return LaurentA.from_q(q_terms)


def signature_nullity(m: SeifertMatrix) -> tuple[int, int, GaussianInt]:
    """(signature, nullity, det(-i (theta + theta^T))) of the symmetrised form."""
    theta = m.entries
    g = len(theta)
    sym = [[theta[i][j] + theta[j][i] for j in range(g)] for i in range(g)]
    det = i_power(-g) * _det(sym)
    a = [[Fraction(v) for v in r] for r in sym]
    sig = rank = 0
    while a:
        n = len(a)
        piv = next((i for i in range(n) if a[i][i]), None)
        if piv is not None:
            p = a[piv][piv]
            sig += 1 if p > 0 else -1
            rank += 1
            keep = [i for i in range(n) if i != piv]
            a = [[a[i][j] - a[i][piv] * a[piv][j] / p for j in keep] for i in keep]
            continue
        off = next(((i, j) for i in range(n) for j in range(i + 1, n) if a[i][j]), None)
        if off is None:
            break
        # zero diagonal: split off a hyperbolic pair, signature 0 and rank 2
        i0, j0 = off
        b = a[i0][j0]
        keep = [i for i in range(n) if i not in off]
        a = [[a[r][c] - (a[r][i0] * a[j0][c] + a[r][j0] * a[i0][c]) / b for c in keep]
             for r in keep]
        rank += 2
    return sig, g - rank, det
