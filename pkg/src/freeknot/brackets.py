"""Formal GF(2) sums of reduced diagrams and the three state-sum invariants.

Values live in three spaces of R2-reduced diagram classes with XOR addition:

* ``knot``  -- one-component classes (the bare circle is a legal element),
* ``link``  -- any component count, classes containing a free loop are zero,
* ``link2`` -- the two-component part of ``link``.

``delta`` splits one crossing into the two-component smoothing and sums over
crossings; ``alex_bracket`` smooths every Gaussian-even crossing and keeps
the one-component states; ``kauffman_bracket`` smooths every
component-parity-even crossing of a two-component diagram and drops states
that acquire a free loop; ``kdelta`` composes the last two linearly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .diagrams import (
    CanonicalCode,
    CodeError,
    FramedDiagram,
    PAIRING_A,
    PAIRING_B,
    PreconditionError,
    component_count,
    splice_out,
    to_framed,
)
from .moves import find_r2, reduce_r2
from .parity import component_parity, gaussian_parity

CTX_KNOT = "knot"
CTX_LINK = "link"
CTX_LINK2 = "link2"

#: the two smoothing selectors: A joins slots (0,1),(2,3); B joins (0,3),(1,2)
SMOOTHING_PAIRINGS = {"A": PAIRING_A, "B": PAIRING_B}


@dataclass(frozen=True)
class FormalSum:
    """GF(2) combination of canonical reduced diagrams: membership in
    ``terms`` is coefficient 1, addition is symmetric difference."""

    terms: frozenset
    context: str

    def __post_init__(self):
        for t in self.terms:
            _check_member(t, self.context)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __xor__(self, other: "FormalSum") -> "FormalSum":
        if self.context != other.context:
            raise PreconditionError("cannot add sums from different spaces")
        return FormalSum(self.terms ^ other.terms, self.context)

    def sorted_terms(self) -> list[CanonicalCode]:
        return sorted(self.terms)

    def max_term_vertices(self) -> int:
        """Largest vertex count over the support; 0 for the empty sum."""
        return max((t.chord_count for t in self.terms), default=0)


def _check_member(t: CanonicalCode, context: str):
    if not isinstance(t, CanonicalCode):
        raise CodeError("formal sum members must be canonical codes")
    if find_r2(to_framed(t)):
        raise CodeError(f"member {t} is not R2-irreducible")
    if context == CTX_KNOT:
        if t.component_count != 1:
            raise CodeError(f"member {t} of a knot sum must have one component")
    elif context in (CTX_LINK, CTX_LINK2):
        if t.free_loops:
            raise CodeError(f"member {t} contains a free loop")
        if context == CTX_LINK2 and t.component_count != 2:
            raise CodeError(f"member {t} must have two components")
    else:
        raise CodeError(f"unknown context {context!r}")


def formal_sum(context: str, terms=()) -> FormalSum:
    return FormalSum(frozenset(terms), context)


# ---------------------------------------------------------------------------
# Smoothing


def smooth(d: FramedDiagram, v, choice: str) -> FramedDiagram:
    """Delete vertex ``v`` and repaste its half-edges per the choice; the
    rest of the diagram is untouched, and closing splices become free
    loops."""
    if choice not in SMOOTHING_PAIRINGS:
        raise CodeError(f"smoothing choice must be 'A' or 'B', got {choice!r}")
    if (v, 0) not in d.mate:
        raise CodeError(f"vertex {v!r} not in diagram")
    return splice_out(d, {v: SMOOTHING_PAIRINGS[choice]})


def resolve(d: FramedDiagram, choices: dict) -> FramedDiagram:
    """Smooth several vertices simultaneously (vertex -> 'A'/'B')."""
    for v, choice in choices.items():
        if choice not in SMOOTHING_PAIRINGS:
            raise CodeError(f"smoothing choice must be 'A' or 'B', got {choice!r}")
        if (v, 0) not in d.mate:
            raise CodeError(f"vertex {v!r} not in diagram")
    return splice_out(d, {v: SMOOTHING_PAIRINGS[c] for v, c in choices.items()})


def _as_framed(code) -> FramedDiagram:
    if isinstance(code, FramedDiagram):
        return code
    return to_framed(code)


def _require_components(d: FramedDiagram, n: int, what: str):
    k = component_count(d)
    if k != n:
        raise PreconditionError(f"{what} requires {n} unicursal component(s), found {k}")


# ---------------------------------------------------------------------------
# The invariants


def split_smoothing(d: FramedDiagram, v) -> FramedDiagram:
    """The unique smoothing of a one-component diagram at ``v`` that yields
    two components (same-circle chords split into n or n+1 components, so
    exactly one choice qualifies)."""
    n = component_count(d)
    results = [smooth(d, v, c) for c in ("A", "B")]
    hits = [r for r in results if component_count(r) == n + 1]
    if len(hits) != 1:
        raise CodeError(f"expected exactly one splitting smoothing at {v!r}, got {len(hits)}")
    return hits[0]


def delta_terms(code) -> list[tuple]:
    """Per-crossing raw summands of ``delta`` before cancellation: a list of
    (vertex, reduced canonical code, saw_free_loop)."""
    d = _as_framed(code)
    _require_components(d, 1, "delta")
    out = []
    for v in d.vertices():
        term = split_smoothing(d, v)
        reduced, saw = reduce_r2(term)
        out.append((v, reduced, saw))
    return out


def delta(code) -> FormalSum:
    """Sum over crossings of the two-component smoothing, in ``link2``.

    This is a function of the diagram, stable under parallel-pattern second
    moves; it is NOT a full move invariant on its own (a kink added to a
    split component changes the term's R2-class), and the value space
    quotients by the second move only.  The composition ``kdelta`` is the
    full invariant: the two-component bracket absorbs those discrepancies."""
    support: set = set()
    for _, reduced, saw in delta_terms(code):
        if saw:
            continue
        support ^= {reduced}
    return formal_sum(CTX_LINK2, support)


def _state_sum(d: FramedDiagram, even_vertices: list, keep) -> set:
    """XOR of reduced states over all smoothings of ``even_vertices``.
    ``keep(resolved, reduced, saw)`` filters states."""
    support: set = set()
    for assignment in itertools.product("AB", repeat=len(even_vertices)):
        state = resolve(d, dict(zip(even_vertices, assignment)))
        reduced, saw = reduce_r2(state)
        if keep(state, reduced, saw):
            support ^= {reduced}
    return support


def alex_bracket(code) -> FormalSum:
    """Smooth all Gaussian-even crossings, keep one-component states, reduce;
    valued in ``knot``.  With every crossing odd the sum is the single term
    given by reducing the diagram itself."""
    d = _as_framed(code)
    _require_components(d, 1, "alex_bracket")
    par = gaussian_parity(code if not isinstance(code, FramedDiagram) else d)
    evens = sorted((v for v in d.vertices() if not par.is_odd(v)), key=str)
    support = _state_sum(d, evens, lambda state, reduced, saw: component_count(state) == 1)
    return formal_sum(CTX_KNOT, support)


def kauffman_bracket(code) -> FormalSum:
    """Smooth all component-parity-even crossings of a two-component
    diagram; every state is kept unless it acquires a free loop; valued in
    ``link``."""
    d = _as_framed(code)
    _require_components(d, 2, "kauffman_bracket")
    par = component_parity(code if not isinstance(code, FramedDiagram) else d)
    evens = sorted((v for v in d.vertices() if not par.is_odd(v)), key=str)
    support = _state_sum(d, evens, lambda state, reduced, saw: not saw)
    return formal_sum(CTX_LINK, support)


def kdelta(code) -> FormalSum:
    """Linear extension of the two-component bracket along ``delta``:
    XOR of ``kauffman_bracket`` over the delta terms, in ``link``."""
    d = _as_framed(code)
    _require_components(d, 1, "kdelta")
    total = formal_sum(CTX_LINK)
    for term in delta(d).terms:
        total ^= kauffman_bracket(term)
    return total
