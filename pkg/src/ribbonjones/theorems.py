"""Executable checkers for the bracket, Jones and determinant identities.

Every checker recomputes both sides from the band diagram itself and
records mismatches as data; nothing here raises on a failed identity.
Trials are seeded individually (``seed * 100003 + t``) so any failure
dump can be replayed on its own.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import isqrt
from typing import Callable, Iterable, Sequence

from .bandsurface import (
    _WIDTH_DELTA,
    FOUR_CROSSING,
    TWISTS,
    BandDiagram,
    BandError,
    DivisibilityBreach,
    boundary_diagram,
    boundary_link,
    bundled_surfaces,
    divide_qplus,
    from_tokens,
    mutate,
    random_band,
    resolve_pattern,
    sites_of,
    smooth,
    surface_determinant,
    surface_stats,
    tile_crossings,
)
from .diagram import (
    PDDiagram,
    bundled_links,
    components,
    crossing_signs,
    orient,
    orientation,
    random_diagram,
    render_pd,
    sublink,
)
from .jones import (
    bracket,
    bracket_statesum,
    bracket_sweep,
    jones_polynomial,
    jones_profile,
    writhe_factor,
)
from .laurent import (
    QPLUS,
    GaussianInt,
    LaurentA,
    NotInQSubring,
    eval_q_i,
    expand_series,
    i_power,
)
from .seifert import alexander, seifert_matrix, signature_nullity

KINDS = ("singularity_removal", "band_crossing_change", "oriented_finite_type",
         "twist_laws", "determinant_skein")
MAX_ATTEMPTS = 5000


@dataclass(frozen=True)
class Failure:
    seed: int
    dump: str
    lhs: str
    rhs: str


@dataclass
class CheckOutcome:
    name: str
    trials: int = 0
    failures: list[Failure] = field(default_factory=list)
    counts: dict[str, int] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, seed: int, dump: str, lhs: object, rhs: object) -> None:
        self.failures.append(Failure(seed, dump, str(lhs), str(rhs)))

    def merge(self, other: CheckOutcome) -> None:
        self.trials += other.trials
        self.failures.extend(other.failures)
        for key, n in other.counts.items():
            self.tally(key, n)

    def tally(self, key: str, n: int = 1) -> None:
        self.counts[key] = self.counts.get(key, 0) + n

    def render(self) -> str:
        lines = [
            f"check={self.name}",
            f"trials={self.trials}",
            f"failures={len(self.failures)}",
            f"passed={'true' if self.passed else 'false'}",
        ]
        lines += [f"{key}={n}" for key, n in sorted(self.counts.items())]
        for f in self.failures[:5]:
            lines += [f"  seed={f.seed}", f"  surface={f.dump}", f"  lhs={f.lhs}", f"  rhs={f.rhs}"]
        return "\n".join(lines)


def trial_seed(seed: int, t: int) -> int:
    return seed * 100003 + t


def _mono(e: int) -> LaurentA:
    return LaurentA.monomial(e)


def _q(terms: dict[int, int]) -> LaurentA:
    return LaurentA.from_q(terms)


def random_context(rng: random.Random, kinds: Iterable[str], orientable: bool = False,
                   min_euler: int | None = None,
                   keep: Callable[[BandDiagram, int], bool] | None = None,
                   **band_opts) -> tuple[BandDiagram, int]:
    """A random band diagram together with one site whose tile kind is in ``kinds``.

    ``keep`` rejects vacuous draws.  Most random band crossings can be slid
    off, so without it the two sides of an identity are usually both zero.
    """
    kinds = tuple(kinds)
    band_opts.setdefault("max_crossings", 18)
    for _ in range(MAX_ATTEMPTS):
        s = random_band(rng, **band_opts)
        sites = sites_of(s, kinds)
        if not sites:
            continue
        if orientable or min_euler is not None:
            st = surface_stats(s)
            if orientable and not st.orientable:
                continue
            if min_euler is not None and st.euler < min_euler:
                continue
        site = rng.choice(sites)
        if keep is None or keep(s, site):
            return s, site
    raise BandError(f"no random context with a {'/'.join(kinds)} tile found")


def _patterns(s: BandDiagram, site: int, words: Iterable[str],
              engine: str) -> dict[str, LaurentA]:
    return {w: bracket(resolve_pattern(s, site, w), engine) for w in words}


# -- bracket level -------------------------------------------------------------

def _singularity_removal(s: BandDiagram, site: int, engine: str) -> tuple[LaurentA, LaurentA]:
    lhs = (bracket(boundary_diagram(s), engine)
           - bracket(boundary_diagram(mutate(s, site, "sing_to_crossing")), engine))
    g = _patterns(s, site, ("BBAB", "AAAB", "BBAA", "AAAA", "AABB", "BBBB"), engine)
    rhs = ((_mono(2) - _mono(-2)) * (g["BBAB"] - g["AAAB"])
           + (_mono(4) - 1) * (g["BBAA"] - g["AAAA"])
           + (_mono(-4) - 1) * (g["AABB"] - g["BBBB"]))
    return lhs, rhs


def _band_crossing_change(s: BandDiagram, site: int, engine: str) -> tuple[LaurentA, LaurentA]:
    lhs = (bracket(boundary_diagram(s), engine)
           - bracket(boundary_diagram(mutate(s, site, "crossing_change")), engine))
    g = _patterns(s, site, ("AAAA", "BBBB", "BAAA", "BBAB", "AAAB", "BABB"), engine)
    rhs = ((_mono(4) - _mono(-4)) * (g["AAAA"] - g["BBBB"])
           + (_mono(2) - _mono(-2)) * (g["BAAA"] - g["BBAB"] + g["AAAB"] - g["BABB"]))
    return lhs, rhs


def orientation_slots(s: BandDiagram) -> int:
    """Number of entries an explicit ``orient_choice`` for s must have."""
    return len(components(orient(boundary_diagram(s))))


# -- Jones and determinant level ----------------------------------------------

Pairs = list[tuple[str, object, object]]


def _divisible(v: LaurentA, power: int) -> bool:
    try:
        divide_qplus(v, max(power, 0))
    except DivisibilityBreach:
        return False
    return True


def _det(v: LaurentA, chi: int) -> GaussianInt:
    if chi <= 0:
        return GaussianInt(0)
    return eval_q_i(divide_qplus(v, chi - 1))


def _rest_writhe(d: PDDiagram, ks: Sequence[int]) -> tuple[int, int]:
    """(writhe outside the tile, writhe of the tile crossings)."""
    signs = crossing_signs(d)
    tile = sum(signs[k] for k in ks)
    return sum(signs) - tile, tile


def _oriented_finite_type(s: BandDiagram, site: int, engine: str) -> Pairs:
    sp = mutate(s, site, "crossing_change")
    d, dp = boundary_link(s), boundary_link(sp)
    ks = tile_crossings(s)[site]
    w_rest, tile = _rest_writhe(d, ks)
    w_rest_p, tile_p = _rest_writhe(dp, ks)
    lhs = jones_polynomial(d, engine) - jones_polynomial(dp, engine)
    g = {w: v * writhe_factor(w_rest)
         for w, v in _patterns(s, site, ("AAAA", "BBBB", "BAAA", "BBAB", "AAAB", "BABB"),
                               engine).items()}
    rhs = (_q({-1: 1, 1: -1}) * QPLUS * (g["AAAA"] - g["BBBB"])
           + _q({1: 1, -1: -1}) * (g["BAAA"] - g["BBAB"] + g["AAAB"] - g["BABB"]))
    chi = surface_stats(s).euler
    out: Pairs = [("V", lhs, rhs), ("tile_writhe", (tile, tile_p), (0, 0)),
                  ("rest_writhe", w_rest_p, w_rest)]
    for w, v in g.items():
        need = chi - 1 if w in ("AAAA", "BBBB") else chi
        out.append((f"divisible_{w}", _divisible(v, need), True))
    return out


def _determinant_skein(s: BandDiagram, site: int, engine: str) -> Pairs:
    sp = mutate(s, site, "sing_to_crossing")
    st = surface_stats(s)
    chi = st.euler
    lhs = (surface_determinant(s, engine=engine, stats=st)
           - surface_determinant(sp, engine=engine))
    d, dp = boundary_link(s), boundary_link(sp)
    ks = tile_crossings(s)[site]
    _, tile = _rest_writhe(d, ks)
    w_rest, tile_p = _rest_writhe(dp, ks)
    g = {w: v * writhe_factor(w_rest)
         for w, v in _patterns(s, site, ("BBAA", "AAAA", "AABB", "BBBB", "BBAB", "AAAB"),
                               engine).items()}
    out: Pairs = [("tile_writhe", (tile, tile_p), (0, 0))]
    for w, v in g.items():
        # resolutions that merge the two bands gain one in Euler characteristic
        need = chi if w in ("BBAB", "AAAB") else chi - 1
        out.append((f"divisible_{w}", _divisible(v, need), True))
    try:
        rhs = (_det(g["BBAA"], chi) - _det(g["AAAA"], chi)
               + _det(g["AABB"], chi) - _det(g["BBBB"], chi)) * -2
    except (DivisibilityBreach, NotInQSubring) as exc:
        rhs = f"error: {exc}"
    out.append(("det", lhs, rhs))
    return out


def _insert_double_twist(s: BandDiagram, rng: random.Random) -> BandDiagram:
    tokens = [(t.kind, t.pos) for t in s.tiles]
    width, slots = 0, []
    for i, (kind, _pos) in enumerate(tokens):
        width += _WIDTH_DELTA.get(kind, 0)
        if width:
            slots.append((i + 1, width))
    at, width = rng.choice(slots)
    twist = (rng.choice(TWISTS), rng.randrange(width))
    return from_tokens(tokens[:at] + [twist, twist] + tokens[at:])


def _straight_letter(kind: str) -> str:
    # a positive half twist is the crossing whose straight smoothing is B
    return "B" if kind == "twist+" else "A"


def _twist_orientation(s: BandDiagram, choice: tuple[int, ...], chi: int, engine: str) -> Pairs:
    out: Pairs = []
    d = boundary_link(s, choice)
    signs = crossing_signs(d)
    w = sum(signs)
    v = jones_polynomial(d, engine)
    twisted = _det(v, chi)
    for t in sites_of(s, TWISTS):
        k = tile_crossings(s)[t][0]
        kind = s.tiles[t].kind
        sign = signs[k]
        flat = smooth(d, {k: _straight_letter(kind)})
        parallel = (sign > 0) == (kind == "twist-")
        if parallel:
            v_flat = bracket(flat, engine) * writhe_factor(w - sign)
            straight = _det(v_flat, chi)
            out.append((f"parallel@{t}", twisted, i_power(sign) * straight))
            # the discarded smoothing has larger Euler characteristic
            out.append((f"parallel_divisible@{t}",
                        _divisible(v - _q({sign: 1}) * v_flat, chi), True))
            continue
        straight = _det(jones_polynomial(orient(flat), engine), chi)
        out.append((f"antiparallel_norm@{t}", twisted.norm(), straight.norm()))
        n = straight.norm()
        if n:
            unit = twisted * straight.conjugate()
            out.append((f"antiparallel_unit@{t}",
                        unit in (GaussianInt(n), GaussianInt(-n), GaussianInt(0, n),
                                 GaussianInt(0, -n)), True))
    return out


def _twist_laws_induced(s: BandDiagram, site: int, engine: str,
                        rng: random.Random) -> Pairs:
    st = surface_stats(s)
    base = surface_determinant(s, engine=engine, stats=st)
    return [
        ("double_twist", surface_determinant(_insert_double_twist(s, rng), engine=engine), base),
        ("twist_change", surface_determinant(mutate(s, site, "twist_change"), engine=engine),
         base),
    ]


def _twist_laws(s: BandDiagram, site: int, engine: str, rng: random.Random) -> Pairs:
    """Twist laws under explicit orientations; the induced ones too if s is orientable."""
    st = surface_stats(s)
    chi = st.euler
    out: Pairs = []
    if st.orientable:
        out += _twist_laws_induced(s, site, engine, rng)
    slots = orientation_slots(s)
    if slots <= 4:
        choices = [tuple(1 - 2 * ((m >> j) & 1) for j in range(slots)) for m in range(2 ** slots)]
    else:
        choices = [tuple(rng.choice((1, -1)) for _ in range(slots)) for _ in range(16)]
    for choice in choices:
        out += _twist_orientation(s, choice, chi, engine)
    return out


def _changes_bracket(move: str) -> Callable[[BandDiagram, int], bool]:
    def keep(s: BandDiagram, site: int) -> bool:
        return (bracket_sweep(boundary_diagram(s))
                != bracket_sweep(boundary_diagram(mutate(s, site, move))))
    return keep


def _parallel_reachable(s: BandDiagram, site: int) -> bool:
    """Some orientation makes the strands at the twist parallel."""
    d = orient(boundary_diagram(s))
    k = tile_crossings(s)[site][0]
    o = orientation(d)
    x = d.crossings[k]
    parallel = (o.sign(k) > 0) == (s.tiles[site].kind == "twist-")
    return parallel or o.arc_component[x[0]] != o.arc_component[x[1]]


def _nonzero_determinant(s: BandDiagram, site: int) -> bool:
    return surface_determinant(s, engine="sweep") != 0


# kind -> (tile kinds carrying the site, orientable only, minimal Euler characteristic)
_CONTEXTS = {
    "singularity_removal": (("sing_lr", "sing_rl"), False, None),
    "band_crossing_change": (("xover", "xunder"), False, None),
    "oriented_finite_type": (("xover", "xunder"), True, None),
    "twist_laws": (TWISTS, True, 1),
    "determinant_skein": (("sing_lr", "sing_rl"), True, 1),
}
_KEEP = {
    "singularity_removal": _changes_bracket("sing_to_crossing"),
    "band_crossing_change": _changes_bracket("crossing_change"),
    "oriented_finite_type": _changes_bracket("crossing_change"),
    "twist_laws": _nonzero_determinant,
    "determinant_skein": _changes_bracket("sing_to_crossing"),
}


def _identity_pairs(kind: str, s: BandDiagram, site: int, engine: str,
                    rng: random.Random) -> Pairs:
    if kind == "singularity_removal":
        return [("bracket", *_singularity_removal(s, site, engine))]
    if kind == "band_crossing_change":
        return [("bracket", *_band_crossing_change(s, site, engine))]
    if kind == "oriented_finite_type":
        return _oriented_finite_type(s, site, engine)
    if kind == "determinant_skein":
        return _determinant_skein(s, site, engine)
    return _twist_laws(s, site, engine, rng)


def _record(out: CheckOutcome, seed: int, dump: str, pairs: Pairs) -> None:
    out.trials += 1
    for label, lhs, rhs in pairs:
        if lhs != rhs:
            out.fail(seed, dump, f"{label}: {lhs}", rhs)


def check_identity(kind: str, trials: int = 100, seed: int = 0, engine: str = "sweep",
                   contexts: Sequence[tuple[BandDiagram, int]] = ()) -> CheckOutcome:
    """Check one identity on ``contexts`` and on ``trials`` random contexts.

    Random contexts are drawn so that the site carries the relevant tile,
    and for the oriented identities so that the surface is orientable.
    """
    if kind not in _CONTEXTS:
        raise ValueError(f"unknown identity {kind!r}; expected one of {', '.join(KINDS)}")
    if trials < 0:
        raise ValueError("trials must be non-negative")
    tiles, orientable, min_euler = _CONTEXTS[kind]
    out = CheckOutcome(kind)
    for n, (s, site) in enumerate(contexts):
        _record(out, -1 - n, s.render(),
                _identity_pairs(kind, s, site, engine, random.Random(n)))
    for t in range(trials):
        ts = trial_seed(seed, t)
        rng = random.Random(ts)
        s, site = random_context(rng, tiles, orientable, min_euler, _KEEP[kind])
        _record(out, ts, f"{s.render()} @ site {site}",
                _identity_pairs(kind, s, site, engine, rng))
        if kind == "twist_laws":
            # parallel strands need a non-orientable band or two boundary components
            s, site = random_context(rng, TWISTS, False, 1, _parallel_reachable)
            _record(out, ts, f"{s.render()} @ site {site}", _twist_laws(s, site, engine, rng))
            out.trials -= 1
    return out


# -- congruences ---------------------------------------------------------------

def _component_dets(d: PDDiagram, engine: str) -> list[GaussianInt]:
    return [eval_q_i(jones_polynomial(orient(sublink(d, [i])), engine))
            for i in range(len(components(d)))]


def _congruence_pairs(s: BandDiagram, engine: str, out: CheckOutcome) -> Pairs:
    st = surface_stats(s)
    det = surface_determinant(s, engine=engine, stats=st)
    pairs: Pairs = [("integral", det.im, 0)]
    value, dfc = det.re, st.deficiency
    if dfc == 0:
        out.tally("case_d0")
        pairs.append(("mod8", value % 8, 1))
        d = boundary_link(s)
        jdet = jones_profile_det(d, engine)
        prod = GaussianInt(1)
        for k in _component_dets(d, engine):
            prod = prod * k
        if st.components > 1:
            out.tally("mod32_multi")
        pairs += [("jones_det", jdet, det),
                  ("mod32", (jdet - prod).re % 32, 0), ("mod32_im", (jdet - prod).im, 0)]
    elif dfc == 1:
        out.tally("case_d1")
        if value % 8:
            out.tally("case_d1_nonzero_mod8")
        pairs.append(("mod8", (value - 4 * st.essential) % 8, 0))
    else:
        out.tally("case_d2plus")
        pairs.append((f"mod{2 ** (dfc + 1)}", value % 2 ** (dfc + 1), 0))
    return pairs


def jones_profile_det(d: PDDiagram, engine: str) -> GaussianInt:
    """det V(L) via the nullity route, independent of the surface."""
    report = jones_profile(d, engine=engine, order=0)
    if report.jones_det is None:
        raise DivisibilityBreach("V(L) is not divisible by (q + q^-1)^(n-1)")
    return report.jones_det


def _congruence_case(case: int, t: int) -> Callable[[BandDiagram], bool]:
    def keep(s: BandDiagram) -> bool:
        st = surface_stats(s)
        if not st.orientable or st.euler < 1:
            return False
        if case == 0:
            return st.deficiency == 0 and (t % 2 == 0 or st.components > 1)
        if case == 1:
            return st.deficiency == 1 and (t % 2 == 0 or st.essential % 2 == 1)
        return st.deficiency >= 2
    return keep


def random_surface(rng: random.Random, keep: Callable[[BandDiagram], bool],
                   **band_opts) -> BandDiagram:
    for _ in range(20 * MAX_ATTEMPTS):
        s = random_band(rng, **band_opts)
        if keep(s):
            return s
    raise BandError("no random surface with the requested properties found")


def reshuffle(s: BandDiagram, rng: random.Random) -> BandDiagram:
    """Re-pick every four-crossing tile and every twist; the core graph is kept."""
    for i, tile in enumerate(s.tiles):
        if tile.kind in FOUR_CROSSING:
            s = s.replace_tile(i, rng.choice(FOUR_CROSSING))
        elif tile.kind in TWISTS:
            s = s.replace_tile(i, rng.choice(TWISTS))
    return s


def _multiplicativity_defect(s: BandDiagram, engine: str) -> int:
    d = boundary_link(s)
    prod = GaussianInt(1)
    for k in _component_dets(d, engine):
        prod = prod * k
    return (jones_profile_det(d, engine) - prod).re


def _skeletons(corpus: Sequence[BandDiagram]) -> list[BandDiagram]:
    def multi_disk(s: BandDiagram) -> bool:
        st = surface_stats(s)
        return st.orientable and st.deficiency == 0 and st.components > 1
    found = [s for s in corpus if multi_disk(s)]
    if not found:
        found = [b.surface for b in bundled_surfaces() if multi_disk(b.surface)]
    return found


def check_congruences(corpus: Sequence[BandDiagram] = (), trials: int = 50, seed: int = 0,
                      engine: str = "sweep") -> CheckOutcome:
    """Congruences for [S] by deficiency, plus mod 32 multiplicativity for disks.

    ``trials`` random orientable surfaces are drawn for each of the three
    deficiency cases; on odd trials the draw insists on the interesting
    sub-case (several disks, resp. an odd number of essential singularities).
    Random multi-disk band words essentially never link their disks
    strongly enough to move det V(L) away from the product of the knot
    determinants, so a fourth batch reshuffles the tiles of multi-disk
    skeletons, requiring a nonzero defect on odd trials.
    Non-orientable members of ``corpus`` are skipped.
    """
    out = CheckOutcome("congruences")
    for n, s in enumerate(corpus):
        if not surface_stats(s).orientable:
            out.tally("skipped_nonorientable")
            continue
        _record(out, -1 - n, s.render(), _congruence_pairs(s, engine, out))
    for t in range(trials):
        for case in range(3):
            ts = trial_seed(seed, 3 * t + case)
            rng = random.Random(ts)
            s = random_surface(rng, _congruence_case(case, t), max_tokens=18,
                               junction_weight=1.0 if case == 0 else 4.0)
            _record(out, ts, s.render(), _congruence_pairs(s, engine, out))
    skeletons = _skeletons(corpus)
    for t in range(trials if skeletons else 0):
        ts = trial_seed(seed, 3 * trials + t)
        rng = random.Random(ts)
        for _ in range(MAX_ATTEMPTS):
            s = reshuffle(rng.choice(skeletons), rng)
            if t % 2 == 0 or _multiplicativity_defect(s, engine):
                break
        if _multiplicativity_defect(s, engine):
            out.tally("mod32_defect_nonzero")
        _record(out, ts, s.render(), _congruence_pairs(s, engine, out))
    return out


# -- finite type ----------------------------------------------------------------

_MOVES = {"xover": "crossing_change", "xunder": "crossing_change",
          "twist+": "twist_change", "twist-": "twist_change"}


def _series_sum(terms: Iterable[tuple[int, LaurentA]],
                order: int) -> list[tuple[Fraction, Fraction]]:
    total = [(Fraction(0), Fraction(0))] * (order + 1)
    for sign, v in terms:
        series = expand_series(v, "at_i", order)
        total = [(re_ + sign * c.real, im + sign * c.imag)
                 for (re_, im), c in zip(total, series.coeffs)]
    return total


def check_finite_type(s: BandDiagram, X: Iterable[int], order_k: int | None = None,
                      engine: str = "sweep", seed: int = -1) -> CheckOutcome:
    """Alternating sum over subsets of X: divisibility and vanishing d_k.

    X holds band crossing and band twist sites; s must be orientable and
    carries its induced orientation throughout.  ``order_k`` bounds the
    d_k checked and defaults to |X| + chi(S).
    """
    X = sorted(set(X))
    tiles = s.tiles
    for site in X:
        if not 0 <= site < len(tiles) or tiles[site].kind not in _MOVES:
            kind = tiles[site].kind if 0 <= site < len(tiles) else "missing"
            raise BandError(f"site {site} ({kind}) is not a band crossing or twist")
    st = surface_stats(s)
    if not st.orientable:
        raise BandError("finite type checks need an orientable surface")
    power = len(X) + st.euler - 1
    order = power + 1 if order_k is None else order_k
    out = CheckOutcome("finite_type", trials=1)
    terms = []
    for r in range(len(X) + 1):
        for Y in combinations(X, r):
            sY = s
            for site in Y:
                sY = mutate(sY, site, _MOVES[tiles[site].kind])
            terms.append((-1 if r % 2 else 1, jones_polynomial(boundary_link(sY), engine)))
    alt = sum((v * sign for sign, v in terms), LaurentA())
    dump = f"{s.render()} @ X={','.join(map(str, X))}"
    if not _divisible(alt, power):
        out.fail(seed, dump, f"alternating sum {alt}", f"divisible by (q+q^-1)^{power}")
    if alt:
        out.tally("nonzero_sum")
    for k, (re_, im) in enumerate(_series_sum(terms, max(order, 0))):
        if k < power and (re_ or im):
            out.fail(seed, dump, f"d_{k} of alternating sum = {re_} + {im}i", 0)
    return out


def finite_type_suite(trials: int = 50, seed: int = 0, max_sites: int = 3,
                      engine: str = "sweep") -> CheckOutcome:
    """Random orientable surfaces with |X| cycling through 1..max_sites.

    Most draws have an alternating sum that is identically zero, so draws
    are repeated until the sum is nonzero (up to MAX_ATTEMPTS).  Odd trials
    reshuffle the bundled orientable surfaces instead of drawing band words.
    """
    skeletons = [b.surface for b in bundled_surfaces()
                 if surface_stats(b.surface).orientable and surface_stats(b.surface).euler >= 1]
    out = CheckOutcome("finite_type")
    for t in range(trials):
        ts = trial_seed(seed, t)
        rng = random.Random(ts)
        size = t % max_sites + 1

        def keep(s: BandDiagram) -> bool:
            st = surface_stats(s)
            return st.orientable and st.euler >= 1 and len(sites_of(s, _MOVES)) >= size

        for _ in range(MAX_ATTEMPTS):
            if t % 2:
                s = reshuffle(rng.choice(skeletons), rng)
                if not keep(s):
                    continue
            else:
                s = random_surface(rng, keep, max_crossings=20, max_tokens=18,
                                   junction_weight=3.0)
            one = check_finite_type(s, rng.sample(sites_of(s, _MOVES), size),
                                    engine=engine, seed=ts)
            if one.counts.get("nonzero_sum") or not one.passed:
                break
        else:
            out.tally("vacuous")
        out.merge(one)
        out.tally(f"size_{size}")
    return out


def check_dk_bridge(s: BandDiagram, engine: str = "sweep", name: str = "") -> CheckOutcome:
    """d_k(boundary) = 0 below chi - 1, and d_{chi-1} = i^(chi-1) [S]."""
    st = surface_stats(s)
    out = CheckOutcome("dk_bridge", trials=1)
    dump = name or s.render()
    if not st.orientable or st.euler < 1:
        raise BandError("the d_k bridge needs an orientable surface with chi >= 1")
    n = st.euler
    series = expand_series(jones_polynomial(boundary_link(s), engine), "at_i", n - 1)
    for k in range(n - 1):
        if not series[k].is_zero():
            out.fail(-1, dump, f"d_{k}={series[k]}", 0)
    other = "auto" if engine == "sweep" else "sweep"
    target = i_power(n - 1) * surface_determinant(s, engine=other, stats=st)
    if series[n - 1] != target:
        out.fail(-1, dump, f"d_{n - 1}={series[n - 1]}", target)
    return out


# -- engine oracle and Seifert cross-validation ------------------------------------

def _bundled_diagrams(max_crossings: int) -> list[tuple[str, PDDiagram]]:
    found = [(name, e.diagram) for name, e in bundled_links().items()]
    found += [(f"{b.name}.band", boundary_diagram(b.surface)) for b in bundled_surfaces()]
    return [(name, d) for name, d in found if len(d.crossings) <= max_crossings]


def check_oracle(trials: int = 500, seed: int = 0, max_crossings: int = 14,
                 bundled: bool = True) -> CheckOutcome:
    """bracket_sweep (greedy and shuffled orders) against bracket_statesum."""
    out = CheckOutcome("oracle")

    def compare(ts: int, dump: str, d: PDDiagram, rng: random.Random) -> None:
        order = list(range(len(d.crossings)))
        rng.shuffle(order)
        ref = bracket_statesum(d)
        _record(out, ts, dump, [("sweep", bracket_sweep(d), ref),
                                ("sweep_shuffled", bracket_sweep(d, order), ref)])

    if bundled:
        for n, (name, d) in enumerate(_bundled_diagrams(18)):
            compare(-1 - n, name, d, random.Random(n))
    for t in range(trials):
        ts = trial_seed(seed, t)
        rng = random.Random(ts)
        d = random_diagram(rng, max_crossings=max_crossings)
        compare(ts, render_pd(d), d, rng)
    return out


def _seifert_pairs(d: PDDiagram, engine: str) -> Pairs:
    m = seifert_matrix(d)
    v_at_i = eval_q_i(jones_polynomial(d, engine))
    sig, _null, det = signature_nullity(m)
    pairs: Pairs = [("alexander_at_i", eval_q_i(alexander(m)), v_at_i),
                    ("det_vs_jones", det, v_at_i)]
    if det != 0:
        pairs.append(("det_phase", det, i_power(-sig) * isqrt(det.norm())))
    return pairs


def check_seifert(trials: int = 0, seed: int = 0, engine: str = "sweep") -> CheckOutcome:
    """Seifert-matrix invariants against the Jones side, bundled links first."""
    out = CheckOutcome("seifert")
    for n, (name, e) in enumerate(bundled_links().items()):
        _record(out, -1 - n, name, _seifert_pairs(e.diagram, engine))
    for t in range(trials):
        ts = trial_seed(seed, t)
        d = random_diagram(random.Random(ts), max_crossings=12)
        _record(out, ts, render_pd(d), _seifert_pairs(d, engine))
    return out


# -- suites -----------------------------------------------------------------------

def identity_suite(trials: int = 100, seed: int = 0, engine: str = "sweep") -> list[CheckOutcome]:
    return [check_identity(kind, trials, seed, engine) for kind in KINDS]


def congruence_suite(trials: int = 50, seed: int = 0, engine: str = "sweep") -> list[CheckOutcome]:
    return [check_congruences([b.surface for b in bundled_surfaces()], trials, seed, engine)]


def dk_bridge_suite(engine: str = "sweep") -> CheckOutcome:
    out = CheckOutcome("dk_bridge")
    for b in bundled_surfaces():
        st = surface_stats(b.surface)
        if st.orientable and st.euler >= 1 and b.orientation() == "induced":
            out.merge(check_dk_bridge(b.surface, engine, b.name))
    return out


def finite_type_suites(trials: int = 50, seed: int = 0,
                       engine: str = "sweep") -> list[CheckOutcome]:
    return [finite_type_suite(trials, seed, engine=engine), dk_bridge_suite(engine)]


SUITES: dict[str, Callable[..., list[CheckOutcome]]] = {
    "identities": lambda trials, seed, engine: identity_suite(trials, seed, engine),
    "congruences": lambda trials, seed, engine: congruence_suite(trials, seed, engine),
    "finite-type": lambda trials, seed, engine: finite_type_suites(trials, seed, engine),
    "oracle": lambda trials, seed, engine: [check_oracle(trials, seed)],
    "seifert": lambda trials, seed, engine: [check_seifert(trials, seed, engine)],
}


def run_suite(name: str, trials: int | None = None, seed: int = 0,
              engine: str = "sweep") -> list[CheckOutcome]:
    """Run one named suite, or every suite for ``"all"``."""
    defaults = {"identities": 100, "congruences": 50, "finite-type": 50, "oracle": 500,
                "seifert": 0}
    names = list(SUITES) if name == "all" else [name]
    results = []
    for n in names:
        if n not in SUITES:
            raise ValueError(f"unknown suite {n!r}")
        results += SUITES[n](defaults[n] if trials is None else trials, seed, engine)
    return results
