"""Kauffman bracket engines and the Jones polynomial profile.

For ``X(a, b, c, d)`` the A-smoothing joins a-b and c-d, the
B-smoothing joins a-d and b-c.  Then

    <D> = sum over states A^(#A - #B) (-A^2 - A^-2)^(loops - 1),
    V(L) = <D> (-A^-3)^writhe       with q = -A^-2.

Two engines evaluate the bracket: ``bracket_statesum`` enumerates all
2^c states and is the oracle; ``bracket_sweep`` adds crossings one at a
time while tracking how the open arc ends are paired up, which is
exponential only in the width of that frontier.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Sequence

from .diagram import PDDiagram, crossing_signs, num_components
from .laurent import (LOOP, ONE, GaussianInt, LaurentA, SeriesAtI,
                      NotInQSubring, eval_q_i, expand_series,
                      factor_multiplicity_qplus, QPLUS, render_q)

STATESUM_CAP = 22
AUTO_THRESHOLD = 18


class EngineError(ValueError):
    pass


def _smoothings(x: Sequence[int]) -> tuple[tuple[tuple[int, int], ...], tuple[tuple[int, int], ...]]:
    a, b, c, d = x
    return ((a, b), (c, d)), ((a, d), (b, c))


def _loop_power(n: int) -> LaurentA:
    return LOOP ** n if n >= 0 else ONE


def bracket_statesum(d: PDDiagram, cap: int = STATESUM_CAP) -> LaurentA:
    """Kauffman bracket by enumerating every state."""
    n = len(d.crossings)
    if n > cap:
        raise EngineError(f"{n} crossings exceed the state-sum cap {cap}; use the sweep engine")
    if n == 0:
        return _loop_power(d.free_loops - 1)
    labels = {a: i for i, a in enumerate(d.arcs())}
    m = len(labels)
    pairs = [[tuple((labels[u], labels[v]) for u, v in s) for s in _smoothings(x)]
             for x in d.crossings]
    counts: dict[tuple[int, int], int] = defaultdict(int)
    for state in range(1 << n):
        parent = list(range(m))
        comps = m
        n_a = 0
        for k in range(n):
            bit = (state >> k) & 1
            n_a += 1 - bit
            for u, v in pairs[k][bit]:
                while parent[u] != u:
                    parent[u] = parent[parent[u]]
                    u = parent[u]
                while parent[v] != v:
                    parent[v] = parent[parent[v]]
                    v = parent[v]
                if u != v:
                    parent[u] = v
                    comps -= 1
        counts[(2 * n_a - n, comps + d.free_loops)] += 1
    total: dict[int, int] = defaultdict(int)
    for (shift, loops), mult in counts.items():
        for e, c in _loop_power(loops - 1).items():
            total[e + shift] += c * mult
    return LaurentA(total)


def greedy_order(d: PDDiagram) -> list[int]:
    """Crossing order keeping the set of half-processed arcs small."""
    n = len(d.crossings)
    if n == 0:
        return []
    touching: dict[int, list[int]] = defaultdict(list)
    for k, x in enumerate(d.crossings):
        for a in set(x):
            touching[a].append(k)
    done = [False] * n
    open_count: dict[int, int] = defaultdict(int)
    score = [0] * n        # arcs of k already open
    order = []
    for _ in range(n):
        best, best_key = -1, None
        candidates = {k for a, cnt in open_count.items() if cnt == 1 for k in touching[a] if not done[k]}
        if not candidates:
            candidates = {next(k for k in range(n) if not done[k])}
        for k in candidates:
            x = d.crossings[k]
            growth = sum(1 for a in x if open_count[a] == 0) - sum(1 for a in x if open_count[a] == 1)
            key = (growth, -score[k], k)
            if best_key is None or key < best_key:
                best, best_key = k, key
        done[best] = True
        order.append(best)
        for a in d.crossings[best]:
            open_count[a] += 1
            for k in touching[a]:
                if not done[k]:
                    score[k] += 1
    return order


def _connect(m: dict[int, int], u: int, v: int) -> int:
    """Join arc ends u and v in the partner map; return closed loops (0/1)."""
    if u == v:
        return 1
    pu = m.pop(u, None)
    pv = m.pop(v, None)
    if pu is None and pv is None:
        m[u], m[v] = v, u
        return 0
    if pu is None:
        m[pv], m[u] = u, pv
        return 0
    if pv is None:
        m[pu], m[v] = v, pu
        return 0
    if pu == v:
        return 1
    m[pu], m[pv] = pv, pu
    return 0


def bracket_sweep(d: PDDiagram, order: Sequence[int] | None = None) -> LaurentA:
    """Kauffman bracket by sweeping crossings along a frontier.

    A frontier state is the partner map of arcs with exactly one end
    processed.  Coefficients are packed into one integer per state,
    sum c_e * 2^(bits*(e + offset)), so that multiplying by A, A^-1 and
    the loop value are shifts and additions.
    """
    n = len(d.crossings)
    if n == 0:
        return _loop_power(d.free_loops - 1)
    if order is None:
        order = greedy_order(d)
    if sorted(order) != list(range(n)):
        raise EngineError("order is not a permutation of the crossings")
    # a state has at most n + (connected pieces of the projection) loops
    max_loops = n + _projection_pieces(d)
    bits = n + max_loops + 8
    offset = n + 2 * max_loops + 4
    sh2 = 2 * bits
    states: dict[tuple, int] = {(): 1 << (bits * offset)}
    for k in order:
        smooth = _smoothings(d.crossings[k])
        nxt: dict[tuple, int] = defaultdict(int)
        for key, val in states.items():
            base = dict(zip(key[0::2], key[1::2]))
            for s, (p1, p2) in enumerate(smooth):
                m = dict(base)
                loops = _connect(m, *p1) + _connect(m, *p2)
                v = (val << bits) if s == 0 else (val >> bits)
                for _ in range(loops):
                    v = -((v << sh2) + (v >> sh2))
                nk = tuple(x for item in sorted(m.items()) for x in item)
                nxt[nk] += v
        states = {key: v for key, v in nxt.items() if v}
        if not states:
            return LaurentA()
    total = states.get((), 0)
    poly = _unpack(total, bits, offset)
    poly = poly * _loop_power(d.free_loops)
    return poly.exact_div(LOOP)


def _projection_pieces(d: PDDiagram) -> int:
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
    return len({find(k) for k in range(len(parent))})


def _unpack(value: int, bits: int, offset: int) -> LaurentA:
    terms = {}
    mask = (1 << bits) - 1
    half = 1 << (bits - 1)
    e = -offset
    while value:
        digit = value & mask
        if digit >= half:
            digit -= 1 << bits
        value = (value - digit) >> bits
        if digit:
            terms[e] = digit
        e += 1
    return LaurentA(terms)


def bracket(d: PDDiagram, engine: str = "auto") -> LaurentA:
    if engine == "statesum":
        return bracket_statesum(d)
    if engine == "sweep":
        return bracket_sweep(d)
    if engine == "auto":
        if len(d.crossings) <= AUTO_THRESHOLD:
            return bracket_statesum(d)
        return bracket_sweep(d)
    raise EngineError(f"unknown engine {engine!r}")


def writhe_factor(w: int) -> LaurentA:
    """(-A^-3)^w."""
    return LaurentA({-3 * w: -1 if w % 2 else 1})


def jones_polynomial(d: PDDiagram, engine: str = "auto") -> LaurentA:
    """V(L) in A-form; guaranteed to lie in Z[q, q^-1]."""
    w = sum(crossing_signs(d))
    v = bracket(d, engine) * writhe_factor(w)
    if not v.in_q_subring():
        raise NotInQSubring("normalized bracket has odd A-exponents")
    return v


@dataclass(frozen=True)
class InvariantReport:
    """Jones-side invariants of one link."""

    name: str
    components: int
    crossings: int
    writhe: int
    jones: LaurentA
    nullity: int
    reduced: LaurentA
    divisible: bool
    det_at_i: GaussianInt
    jones_det: GaussianInt | None
    d_series: SeriesAtI
    v_series: SeriesAtI

    def render(self) -> str:
        lines = [
            f"name={self.name}",
            f"components={self.components}",
            f"crossings={self.crossings}",
            f"writhe={self.writhe}",
            f"V={render_q(self.jones)}",
            f"nullity={self.nullity}",
            f"reduced={render_q(self.reduced)}",
            f"divisible={'true' if self.divisible else 'false'}",
            f"det_at_i={self.det_at_i}",
            f"jones_det={self.jones_det if self.jones_det is not None else 'none'}",
        ]
        lines += [f"d_{k}={c}" for k, c in enumerate(self.d_series.coeffs)]
        lines += [f"v_{k}={c}" for k, c in enumerate(self.v_series.coeffs)]
        return "\n".join(lines)


def reduce_jones(v: LaurentA, n: int) -> tuple[int, LaurentA, bool]:
    """Return (nullity, reduced polynomial, divisible by (q+q^-1)^(n-1))."""
    nullity, rest = factor_multiplicity_qplus(v)
    if nullity >= n - 1:
        return nullity, rest * QPLUS ** (nullity - (n - 1)), True
    return nullity, rest, False


def jones_profile(d: PDDiagram, name: str = "", engine: str = "auto",
                  order: int = 4) -> InvariantReport:
    v = jones_polynomial(d, engine)
    n = num_components(d)
    nullity, reduced, divisible = reduce_jones(v, n)
    det = eval_q_i(v)
    return InvariantReport(
        name=name,
        components=n,
        crossings=len(d.crossings),
        writhe=sum(crossing_signs(d)),
        jones=v,
        nullity=nullity,
        reduced=reduced,
        divisible=divisible,
        det_at_i=det,
        jones_det=eval_q_i(reduced) if divisible else None,
        d_series=expand_series(v, "at_i", order),
        v_series=expand_series(v, "at_1", order),
    )
