"""Minimality certificates, realizability, bounded move search, and random
diagram generation.

The vertex lower bounds come from the state sums: every term of the
one-component bracket is a smoothing of any representative, so its size
bounds the representative from below; every term of the composed bracket
arises after splitting one crossing first, adding one.  A bound equal to the
diagram's own crossing number certifies minimality.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from importlib import resources

from .brackets import (
    alex_bracket,
    kauffman_bracket,
    kdelta,
    split_smoothing,
)
from .diagrams import (
    BudgetError,
    CanonicalCode,
    CodeError,
    FramedDiagram,
    GaussCode,
    PreconditionError,
    canonical_of,
    canonicalize,
    component_count,
    from_framed,
    to_framed,
)
from .moves import find_all_moves, apply_move, find_r2
from .parity import (
    InterlacementGraph,
    component_parity,
    gaussian_parity,
    interlacement,
    source_sink_orientable,
)

REALIZABLE_MAX_VERTICES = 8


def _as_framed(code) -> FramedDiagram:
    if isinstance(code, FramedDiagram):
        return code
    return to_framed(code)


# ---------------------------------------------------------------------------
# Minimality certificates


@dataclass(frozen=True)
class MinimalityCertificate:
    """A proven lower bound on the vertex count of every equivalent diagram.
    ``tight`` means the bound equals the diagram's own vertex count, i.e.
    the diagram is minimal."""

    diagram: CanonicalCode
    bound: int
    witness_invariant: str  # alex | kdelta | kauffman
    witness_term: CanonicalCode | None
    tight: bool


def lower_bound_knot(code) -> MinimalityCertificate:
    """max(largest one-component bracket term, largest composed-bracket term
    plus one); empty sums contribute zero."""
    d = _as_framed(code)
    can = canonical_of(d)
    a = alex_bracket(d)
    kd = kdelta(d)
    a_bound = a.max_term_vertices() if a.terms else 0
    kd_bound = kd.max_term_vertices() + 1 if kd.terms else 0
    if kd_bound > a_bound:
        bound, name, sum_ = kd_bound, "kdelta", kd
    else:
        bound, name, sum_ = a_bound, "alex", a
    witness = max(sum_.terms, key=lambda t: (t.chord_count, t)) if sum_.terms else None
    return MinimalityCertificate(can, bound, name, witness, bound == can.chord_count)


def lower_bound_link2(code) -> MinimalityCertificate:
    """Largest term of the two-component bracket."""
    d = _as_framed(code)
    can = canonical_of(d)
    kb = kauffman_bracket(d)
    bound = kb.max_term_vertices() if kb.terms else 0
    witness = max(kb.terms, key=lambda t: (t.chord_count, t)) if kb.terms else None
    return MinimalityCertificate(can, bound, "kauffman", witness, bound == can.chord_count)


def intersection_graph(code) -> InterlacementGraph:
    """Interlacement graph of a one-component code (realizability input)."""
    c = code.code() if isinstance(code, CanonicalCode) else code
    if isinstance(c, FramedDiagram):
        c = from_framed(c)
    if c.component_count != 1:
        raise PreconditionError("intersection graph requires one component")
    return interlacement(c)


# ---------------------------------------------------------------------------
# Realizability of abstract graphs as interlacement graphs


def parse_adjacency(text: str) -> InterlacementGraph:
    """Adjacency-list grammar: one line per vertex, ``u: v w ...``;
    lines may also be separated by ';'."""
    verts: list = []
    edges: set = set()
    seen: set = set()
    for raw in text.replace(";", "\n").splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise CodeError(f"adjacency line {line!r} lacks ':'")
        head, _, rest = line.partition(":")
        u = head.strip()
        if not u:
            raise CodeError(f"adjacency line {line!r} lacks a vertex")
        if u not in seen:
            seen.add(u)
            verts.append(u)
        for v in rest.split():
            if v == u:
                raise CodeError(f"loop at {u!r} not allowed")
            if v not in seen:
                seen.add(v)
                verts.append(v)
            edges.add(frozenset((u, v)))
    return InterlacementGraph(tuple(sorted(verts)), frozenset(edges))


def graphs_isomorphic(g1: InterlacementGraph, g2: InterlacementGraph) -> bool:
    """Brute-force isomorphism with degree pruning; fine at <= 8 vertices."""
    if len(g1.vertices) != len(g2.vertices) or len(g1.edges) != len(g2.edges):
        return False
    n1, n2 = g1.neighbor_sets(), g2.neighbor_sets()
    deg1 = sorted(len(s) for s in n1.values())
    deg2 = sorted(len(s) for s in n2.values())
    if deg1 != deg2:
        return False
    order = sorted(g1.vertices, key=lambda v: (-len(n1[v]), str(v)))
    candidates = {
        v: [w for w in g2.vertices if len(n2[w]) == len(n1[v])] for v in order
    }
    assign: dict = {}
    used: set = set()

    def place(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for w in candidates[v]:
            if w in used:
                continue
            ok = True
            for prev, pw in assign.items():
                if (prev in n1[v]) != (pw in n2[w]):
                    ok = False
                    break
            if ok:
                assign[v] = w
                used.add(w)
                if place(i + 1):
                    return True
                del assign[v]
                used.discard(w)
        return False

    return place(0)


def _all_one_circle_codes(n: int):
    """Raw double-occurrence words with n chords ((2n-1)!! of them)."""
    from .diagrams import _matching_to_words, _perfect_matchings

    for matching in _perfect_matchings(tuple(range(2 * n))):
        yield GaussCode(_matching_to_words(matching, (2 * n,)))


def realizable(g: InterlacementGraph) -> CanonicalCode | None:
    """Witness one-circle code whose interlacement graph is isomorphic to
    ``g``, or None after an exhaustive scan of all double-occurrence words
    with |V(g)| chords."""
    n = len(g.vertices)
    if n > REALIZABLE_MAX_VERTICES:
        raise BudgetError(f"realizability scan is bounded at {REALIZABLE_MAX_VERTICES} vertices")
    if n == 0:
        return canonicalize(GaussCode((), 1)) if not g.edges else None
    target_degs = sorted(g.degree(v) for v in g.vertices)
    for code in _all_one_circle_codes(n):
        h = interlacement(code)
        if len(h.edges) != len(g.edges):
            continue
        if sorted(h.degree(v) for v in h.vertices) != target_degs:
            continue
        if graphs_isomorphic(h, g):
            return canonicalize(code)
    return None


# ---------------------------------------------------------------------------
# Bounded breadth-first search over the move graph


@dataclass(frozen=True)
class SearchReport:
    """Outcome of a bounded exploration.  ``reached`` is None when no target
    was given; budget exhaustion without reaching the target is a normal
    outcome, not an error."""

    start: CanonicalCode
    target: CanonicalCode | None
    max_vertices: int
    max_depth: int
    reached: bool | None
    visited: int
    min_vertices: int
    depth_reached: int
    path: tuple[str, ...] | None


def _bfs(start: CanonicalCode, target: CanonicalCode | None, max_vertices: int, max_depth: int) -> SearchReport:
    parents: dict = {start: None}
    frontier = [start]
    depth = 0
    min_seen = start.chord_count
    reached = start == target if target is not None else None

    def finish(found: bool | None) -> SearchReport:
        path = None
        if found:
            steps = []
            cur = target
            while parents[cur] is not None:
                cur, desc = parents[cur]
                steps.append(desc)
            path = tuple(reversed(steps))
        return SearchReport(
            start, target, max_vertices, max_depth, found,
            len(parents), min_seen, depth, path,
        )

    if reached:
        return finish(True)
    while frontier and depth < max_depth:
        depth += 1
        nxt = []
        for can in frontier:
            d = to_framed(can)
            for m in find_all_moves(d, max_vertices):
                child = canonical_of(apply_move(d, m))
                if child in parents:
                    continue
                parents[child] = (can, f"{m.kind}@{m.vertices or m.sites}")
                min_seen = min(min_seen, child.chord_count)
                if target is not None and child == target:
                    return finish(True)
                nxt.append(child)
        frontier = nxt
    return finish(False if target is not None else None)


def bfs_equivalent(a, b, max_vertices: int, max_depth: int) -> SearchReport:
    """Bounded reachability between two codes; can certify equivalence but
    never inequivalence."""
    ca, cb = _to_canonical(a), _to_canonical(b)
    if ca.component_count != cb.component_count:
        raise PreconditionError("codes with different component counts are never equivalent")
    return _bfs(ca, cb, max_vertices, max_depth)


def explore_moves(a, max_vertices: int, max_depth: int) -> SearchReport:
    """Full bounded sweep from one code (no target)."""
    return _bfs(_to_canonical(a), None, max_vertices, max_depth)


def _to_canonical(code) -> CanonicalCode:
    if isinstance(code, CanonicalCode):
        return code
    if isinstance(code, FramedDiagram):
        return canonical_of(code)
    return canonicalize(code)


# ---------------------------------------------------------------------------
# Random generation


def random_diagram(n: int, k: int, seed) -> GaussCode:
    """Uniform over raw double-occurrence word arrangements with ``n``
    chords and ``k`` components: a uniform ordered composition of 2n into k
    positive word lengths plus a uniform perfect matching of positions.
    ``n = 0`` yields ``k`` free loops."""
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    if n < 0 or k < 0:
        raise PreconditionError("n and k must be non-negative")
    if n == 0:
        return GaussCode((), k)
    if not 1 <= k <= 2 * n:
        raise PreconditionError(f"no {k}-component arrangement of {n} chords exists")
    cuts = sorted(rng.sample(range(1, 2 * n), k - 1))
    lengths = []
    prev = 0
    for c in cuts + [2 * n]:
        lengths.append(c - prev)
        prev = c
    free = list(range(2 * n))
    label_at = {}
    nxt = 0
    while free:
        a = free.pop(0)
        b = free.pop(rng.randrange(len(free)))
        label_at[a] = label_at[b] = nxt
        nxt += 1
    words = []
    start = 0
    for ln in lengths:
        words.append(tuple(label_at[p] for p in range(start, start + ln)))
        start += ln
    return GaussCode(tuple(words))


def random_moves(code, count: int, max_vertices: int, seed) -> GaussCode:
    """Apply ``count`` uniformly chosen applicable moves under the vertex
    budget; stops early only if no move applies."""
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    d = _as_framed(code)
    for _ in range(count):
        insts = find_all_moves(d, max_vertices)
        if not insts:
            break
        d = apply_move(d, rng.choice(insts))
    return from_framed(d)


# ---------------------------------------------------------------------------
# Fixture search: a minimal 9-crossing knot diagram and its 8-crossing
# two-component split


def search_minimal_fixtures(limit: int | None = 1) -> list[tuple[GaussCode, GaussCode]]:
    """Scan the 8! normal forms ``x 1..8 x <permutation>`` for one-component
    9-chord diagrams satisfying:

    * every chord Gaussian-even, diagram R2-irreducible,
    * exactly one chord interlaced with all eight others,
    * the two-component split at that chord 8-vertex, R2-irreducible,
      all crossings inter-component, and source-sink orientable.

    Returns (knot diagram, its split) pairs; the prefilter keeps only
    permutations whose same-order pair counts are odd per chord (evenness)
    and below seven (unique hub)."""
    out: list[tuple[GaussCode, GaussCode]] = []
    for pi in itertools.permutations(range(1, 9)):
        pos = {v: i for i, v in enumerate(pi)}
        ok = True
        for i in range(1, 9):
            deg = sum(1 for j in range(1, 9) if i != j and ((i < j) == (pos[i] < pos[j])))
            if deg % 2 == 0 or deg == 7:
                ok = False
                break
        if not ok:
            continue
        word = (0,) + tuple(range(1, 9)) + (0,) + pi
        code = GaussCode((word,))
        k1 = to_framed(code)
        if find_r2(k1):
            continue
        if gaussian_parity(code).odd:
            continue
        g = interlacement(code)
        if [v for v in g.vertices if g.degree(v) == 8] != [0]:
            continue
        l1 = split_smoothing(k1, 0)
        if l1.vertex_count != 8 or component_count(l1) != 2 or find_r2(l1):
            continue
        l1_code = from_framed(l1)
        if not component_parity(l1_code).all_odd():
            continue
        if not source_sink_orientable(l1):
            continue
        out.append((code, l1_code))
        if limit is not None and len(out) >= limit:
            break
    return out


def load_fixture(name: str) -> GaussCode:
    """Read a shipped fixture ('k1' or 'l1'): Gauss-code text, '#' comments."""
    from .diagrams import parse_gauss_code

    text = resources.files("freeknot.fixtures").joinpath(f"{name}.gauss").read_text()
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if len(lines) != 1:
        raise CodeError(f"fixture {name!r} must contain exactly one code line")
    return parse_gauss_code(lines[0])
