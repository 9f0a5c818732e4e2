"""Geometry of the translation quiver ZD for Dynkin diagrams A, D, E.

Vertices, the translation tau, the syzygy automorphism omega, the finite
twist phi, membership in orbits of the admissible group <tau^n phi>, and
the hammock supports of the stable Hom functor computed by mesh knitting.

Coordinates: a vertex is a pair ``(x, t)`` with integer slice coordinate x
and Dynkin label t; tau shifts x by +1 and arrows point towards smaller x.
For type D the two fork tips carry the symbolic labels ``"m+"``/``"m-"``
so that sign bookkeeping mistakes surface as type errors instead of silent
integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Union

__all__ = [
    "SPINE_MINUS",
    "SPINE_PLUS",
    "AlgebraType",
    "Diagram",
    "Hammock",
    "Vertex",
    "group_generator",
    "group_member",
    "hammock_dot",
    "hammock_minus",
    "hammock_plus",
    "omega",
    "omega_inverse",
    "orbit_quiver_dot",
    "orbit_reps",
    "phi",
    "tau",
]

SPINE_PLUS = "m+"
SPINE_MINUS = "m-"

Label = Union[int, str]

_E_M_DELTA = {6: 11, 7: 17, 8: 29}
_E_H_STAR = {6: 6, 7: 9, 8: 15}


def _label_key(t: Label) -> tuple[int, int]:
    if isinstance(t, int):
        return (0, t)
    return (1, 0 if t == SPINE_PLUS else 1)


@dataclass(frozen=True)
class Vertex:
    x: int
    t: Label

    def sort_key(self) -> tuple[int, int, int]:
        return (self.x, *_label_key(self.t))

    def __str__(self) -> str:
        return f"({self.x},{self.t})"


@dataclass(frozen=True)
class Diagram:
    """A Dynkin diagram A_r (r>=1), D_r (r>=4) or E_r (r in 6..8)."""

    family: str
    rank: int

    def __post_init__(self) -> None:
        if self.family not in ("A", "D", "E"):
            raise ValueError(f"unknown diagram family {self.family!r}")
        if self.family == "A" and self.rank < 1:
            raise ValueError(f"type A needs rank >= 1, got {self.rank}")
        if self.family == "D" and self.rank < 4:
            raise ValueError(f"type D needs rank >= 4, got {self.rank}")
        if self.family == "E" and self.rank not in (6, 7, 8):
            raise ValueError(f"type E needs rank 6, 7 or 8, got {self.rank}")

    @property
    def m_delta(self) -> int:
        """Nilpotency bound of the mesh category (Coxeter number minus one)."""
        if self.family == "A":
            return self.rank
        if self.family == "D":
            return 2 * self.rank - 3
        return _E_M_DELTA[self.rank]

    @property
    def h_star(self) -> int:
        """Coxeter number for type A, half of it for types D and E."""
        if self.family == "A":
            return self.rank + 1
        if self.family == "D":
            return self.rank - 1
        return _E_H_STAR[self.rank]

    @property
    def labels(self) -> tuple[Label, ...]:
        return _structure(self.family, self.rank)[0]

    @property
    def arrows(self) -> tuple[tuple[Label, Label], ...]:
        return _structure(self.family, self.rank)[1]

    def is_label(self, t: Label) -> bool:
        return t in self.labels

    def check_label(self, t: Label) -> None:
        if not self.is_label(t):
            raise ValueError(f"label {t!r} is not a vertex of {self.family}{self.rank}")


@lru_cache(maxsize=None)
def _structure(family: str, rank: int):
    """Labels and a fixed edge orientation pinning the coordinates of ZD.

    The orientation is the one under which the automorphism formulas below
    hold verbatim: chains point towards label 1, and the D fork and the E
    branch vertex are fed from their chain neighbours.
    """
    if family == "A":
        labels: tuple[Label, ...] = tuple(range(1, rank + 1))
        arrows = tuple((t, t - 1) for t in range(2, rank + 1))
    elif family == "D":
        m = rank - 1
        labels = tuple(range(1, m)) + (SPINE_PLUS, SPINE_MINUS)
        arrows = tuple((t, t - 1) for t in range(2, m)) + (
            (m - 1, SPINE_PLUS),
            (m - 1, SPINE_MINUS),
        )
    elif rank == 6:
        labels = tuple(range(1, 7))
        arrows = ((2, 1), (3, 2), (4, 3), (5, 4), (6, 3))
    else:
        branch = 4 if rank == 7 else 5
        labels = tuple(range(1, rank + 1))
        arrows = tuple((t, t - 1) for t in range(2, rank)) + ((rank, branch),)
    ins: dict[Label, tuple[Label, ...]] = {c: () for c in labels}
    outs: dict[Label, tuple[Label, ...]] = {c: () for c in labels}
    for a, b in arrows:
        ins[b] += (a,)
        outs[a] += (b,)
    # sinks-first topological order: every out-neighbour precedes its source
    placed: list[Label] = []
    remaining = sorted(labels, key=_label_key)
    while remaining:
        for c in remaining:
            if all(b in placed for b in outs[c]):
                placed.append(c)
                remaining.remove(c)
                break
        else:  # pragma: no cover - the diagram is a tree
            raise AssertionError("orientation is cyclic")
    return labels, arrows, ins, outs, tuple(placed)


@lru_cache(maxsize=None)
def _reachable(family: str, rank: int, t0: Label, against: bool) -> frozenset[Label]:
    """Labels with a directed path to t0 (against=True) or from t0."""
    _, _, ins, outs, _ = _structure(family, rank)
    step = ins if against else outs
    seen = {t0}
    frontier = [t0]
    while frontier:
        c = frontier.pop()
        for b in step[c]:
            if b not in seen:
                seen.add(b)
                frontier.append(b)
    return frozenset(seen)


def tau(v: Vertex, steps: int = 1) -> Vertex:
    """The translation, ``(x, t) -> (x + steps, t)``."""
    return Vertex(v.x + steps, v.t)


def _spine_flip(t: Label) -> Label:
    return SPINE_MINUS if t == SPINE_PLUS else SPINE_PLUS


def omega(diagram: Diagram, v: Vertex) -> Vertex:
    """The syzygy automorphism of ZD in the fixed coordinates."""
    diagram.check_label(v.t)
    if diagram.family == "A":
        m = diagram.rank + 1
        return Vertex(v.x + v.t, m - v.t)
    if diagram.family == "D":
        m = diagram.rank - 1
        if v.t in (SPINE_PLUS, SPINE_MINUS):
            t = _spine_flip(v.t) if m % 2 == 0 else v.t
            return Vertex(v.x + m, t)
        return Vertex(v.x + m, v.t)
    if diagram.rank == 6:
        if v.t == 6:
            return Vertex(v.x + 6, 6)
        return Vertex(v.x + v.t + 3, 6 - v.t)
    return Vertex(v.x + diagram.h_star, v.t)


def omega_inverse(diagram: Diagram, v: Vertex) -> Vertex:
    diagram.check_label(v.t)
    if diagram.family == "A":
        m = diagram.rank + 1
        return Vertex(v.x - (m - v.t), m - v.t)
    if diagram.family == "D":
        m = diagram.rank - 1
        if v.t in (SPINE_PLUS, SPINE_MINUS):
            t = _spine_flip(v.t) if m % 2 == 0 else v.t
            return Vertex(v.x - m, t)
        return Vertex(v.x - m, v.t)
    if diagram.rank == 6:
        if v.t == 6:
            return Vertex(v.x - 6, 6)
        return Vertex(v.x + v.t - 9, 6 - v.t)
    return Vertex(v.x - diagram.h_star, v.t)


@dataclass(frozen=True)
class AlgebraType:
    """A validated triple (diagram, twist order s, tau-exponent n).

    The admissible group is generated by ``tau^n . phi`` where phi is the
    order-s twist; ``u = n / m_delta`` is kept as an exact rational because
    several closed forms key on residues of u.
    """

    diagram: Diagram
    s: int
    u: Fraction
    n: int

    def __post_init__(self) -> None:
        fam, rank = self.diagram.family, self.diagram.rank
        if self.s not in (1, 2, 3):
            raise ValueError(f"twist order must be 1, 2 or 3, got {self.s}")
        if self.u <= 0:
            raise ValueError(f"u must be positive, got {self.u}")
        if self.n != self.u * self.diagram.m_delta or self.n < 1:
            raise ValueError(
                f"tau-exponent {self.n} does not match u={self.u} for {fam}{rank}"
            )
        integral = self.u.denominator == 1
        if fam == "A":
            if self.s == 2:
                if rank < 3 or rank % 2 == 0:
                    raise ValueError("twist order 2 in type A needs odd rank >= 3")
                if not integral:
                    raise ValueError("twist order 2 in type A needs integral u")
            elif self.s != 1:
                raise ValueError("type A admits twist orders 1 and 2 only")
        elif fam == "D":
            if self.s == 3:
                if rank != 4:
                    raise ValueError("twist order 3 happens for D4 only")
                if not integral:
                    raise ValueError("twist order 3 needs integral u")
            elif self.s == 2:
                if not integral:
                    raise ValueError("twist order 2 in type D needs integral u")
            elif not integral:
                if self.u.denominator != 3 or rank % 3 != 0 or rank < 6:
                    raise ValueError(
                        f"fractional type D parameters need u = v/3 with 3 not "
                        f"dividing v and rank a multiple of 3 >= 6, got "
                        f"u={self.u}, rank={rank}"
                    )
        else:
            if self.s == 2 and rank != 6:
                raise ValueError("twist order 2 in type E happens for E6 only")
            if self.s == 3:
                raise ValueError("type E admits twist orders 1 and 2 only")
            if not integral:
                raise ValueError("type E needs integral u")

    @classmethod
    def create(cls, family: str, rank: int, u: Fraction | int | str, s: int = 1) -> "AlgebraType":
        diagram = Diagram(family, rank)
        frac = Fraction(u)
        n = frac * diagram.m_delta
        if n.denominator != 1:
            raise ValueError(
                f"u={frac} gives non-integral tau-exponent for {family}{rank}"
            )
        return cls(diagram=diagram, s=s, u=frac, n=int(n))

    @classmethod
    def from_shift(cls, family: str, rank: int, n: int, s: int = 1) -> "AlgebraType":
        """Expert constructor from the raw tau-exponent of the group generator."""
        diagram = Diagram(family, rank)
        return cls(diagram=diagram, s=s, u=Fraction(n, diagram.m_delta), n=n)

    @property
    def m_delta(self) -> int:
        return self.diagram.m_delta

    @property
    def h_star(self) -> int:
        return self.diagram.h_star

    @property
    def period(self) -> int:
        """x-shift of the s-th power of the group generator, a pure translation."""
        return self.s * self.n

    def describe(self) -> str:
        return f"({self.diagram.family}{self.diagram.rank}, {self.u}, {self.s})"


def phi(atype: AlgebraType, v: Vertex) -> Vertex:
    """The finite twist entering the group generator; identity when s == 1."""
    atype.diagram.check_label(v.t)
    if atype.s == 1:
        return v
    fam = atype.diagram.family
    if fam == "A":
        m = atype.diagram.rank + 1
        return Vertex(v.x + v.t - m // 2, m - v.t)
    if fam == "D":
        if atype.s == 2:
            if v.t in (SPINE_PLUS, SPINE_MINUS):
                return Vertex(v.x, _spine_flip(v.t))
            return v
        cycle: dict[Label, Label] = {1: SPINE_MINUS, SPINE_MINUS: SPINE_PLUS, SPINE_PLUS: 1}
        return Vertex(v.x, cycle.get(v.t, v.t))
    # E6, s == 2: tau^-6 . omega
    return omega(atype.diagram, Vertex(v.x - 6, v.t))


def group_generator(atype: AlgebraType, v: Vertex) -> Vertex:
    """Apply the generator ``tau^n . phi`` of the admissible group once."""
    w = phi(atype, v)
    return Vertex(w.x + atype.n, w.t)


def orbit_reps(atype: AlgebraType, v: Vertex) -> tuple[Vertex, ...]:
    """Orbit representatives: the orbit of v is their translates by period-multiples."""
    reps = [v]
    for _ in range(atype.s - 1):
        reps.append(group_generator(atype, reps[-1]))
    return tuple(reps)


def group_member(atype: AlgebraType, v: Vertex, w: Vertex) -> bool:
    """Whether w lies in the orbit of v under the admissible group."""
    period = atype.period
    for rep in orbit_reps(atype, v):
        if rep.t == w.t and (w.x - rep.x) % period == 0:
            return True
    return False


@dataclass(frozen=True)
class Hammock:
    """Finite support of stable Hom into (or out of) the base vertex."""

    base: Vertex
    members: frozenset[Vertex]

    def __contains__(self, v: Vertex) -> bool:
        return v in self.members

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Vertex]:
        return iter(self.members)

    def sorted_members(self) -> list[Vertex]:
        return sorted(self.members, key=Vertex.sort_key)

    def row(self, t: Label) -> frozenset[int]:
        return frozenset(v.x for v in self.members if v.t == t)


@lru_cache(maxsize=None)
def _knit_profile(
    family: str, rank: int, t0: Label, forward: bool
) -> tuple[tuple[tuple[Label, int], ...], ...]:
    """Multiplicity profile of the hammock at (0, t0), one entry per slice.

    Slice 0 contains the base; subsequent slices sit at x-offset +i for the
    backward hammock and -i for the forward one.  The counter starts as the
    indicator of the labels reachable from t0 inside the base slice and is
    propagated with the mesh recurrence, clamped at zero.  Dynkin hammocks
    die out within m_delta + 1 slices; a hard cap traps anything else.
    """
    labels, _, ins, outs, order = _structure(family, rank)
    if t0 not in labels:
        raise ValueError(f"label {t0!r} is not a vertex of {family}{rank}")
    if forward:
        ins, outs = outs, ins
        order = tuple(reversed(order))
    start = _reachable(family, rank, t0, against=not forward)
    cur = {c: (1 if c in start else 0) for c in labels}
    profile = [cur]
    cap = 4 * Diagram(family, rank).m_delta + 8
    for _ in range(cap):
        nxt: dict[Label, int] = {}
        for c in order:
            total = sum(cur[a] for a in ins[c]) + sum(nxt[b] for b in outs[c])
            nxt[c] = max(0, total - cur[c])
        if not any(nxt.values()):
            return tuple(
                tuple((c, slice_[c]) for c in labels if slice_[c] > 0)
                for slice_ in profile
            )
        profile.append(nxt)
        cur = nxt
    raise RuntimeError(f"knitting from {t0!r} on {family}{rank} did not terminate")


def hammock_minus(diagram: Diagram, v: Vertex) -> Hammock:
    """Support of stable Hom(-, v), knitted backwards against the arrows."""
    profile = _knit_profile(diagram.family, diagram.rank, v.t, forward=False)
    members = frozenset(
        Vertex(v.x + i, c) for i, slice_ in enumerate(profile) for c, _ in slice_
    )
    return Hammock(base=v, members=members)


def hammock_plus(diagram: Diagram, v: Vertex) -> Hammock:
    """Support of stable Hom(v, -), knitted forwards along the arrows."""
    profile = _knit_profile(diagram.family, diagram.rank, v.t, forward=True)
    members = frozenset(
        Vertex(v.x - i, c) for i, slice_ in enumerate(profile) for c, _ in slice_
    )
    return Hammock(base=v, members=members)


# ---------------------------------------------------------------------------
# DOT rendering


def _node_id(v: Vertex) -> str:
    t = {SPINE_PLUS: "p", SPINE_MINUS: "m"}.get(v.t, v.t)
    return f"{v.x}_{t}"


def _mesh_successors(diagram: Diagram, v: Vertex) -> list[Vertex]:
    _, _, ins, outs, _ = _structure(diagram.family, diagram.rank)
    succ = [Vertex(v.x, b) for b in outs[v.t]]
    succ += [Vertex(v.x - 1, a) for a in ins[v.t]]
    return succ


def hammock_dot(diagram: Diagram, hammock: Hammock) -> str:
    """Render the slices spanned by a hammock as a DOT digraph.

    Every vertex of the covered window becomes a node; hammock members are
    filled, the base vertex is double-circled.
    """
    xs = [v.x for v in hammock.members] + [hammock.base.x]
    lo, hi = min(xs), max(xs)
    window = [Vertex(x, t) for x in range(lo, hi + 1) for t in diagram.labels]
    inside = set(window)
    lines = ["digraph hammock {", "  rankdir=RL;"]
    for v in sorted(window, key=Vertex.sort_key):
        attrs = [f'label="{v}"']
        if v == hammock.base:
            attrs.append("shape=doublecircle")
        if v in hammock.members:
            attrs.append("style=filled")
            attrs.append("fillcolor=lightgray")
        lines.append(f'  "{_node_id(v)}" [{", ".join(attrs)}];')
    for v in sorted(window, key=Vertex.sort_key):
        for w in _mesh_successors(diagram, v):
            if w in inside:
                lines.append(f'  "{_node_id(v)}" -> "{_node_id(w)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def canonical_rep(atype: AlgebraType, v: Vertex) -> Vertex:
    """Smallest representative of the orbit of v inside x in [0, period)."""
    period = atype.period
    best: Vertex | None = None
    for rep in orbit_reps(atype, v):
        cand = Vertex(rep.x % period, rep.t)
        if best is None or cand.sort_key() < best.sort_key():
            best = cand
    assert best is not None
    return best


def orbit_quiver_dot(atype: AlgebraType, highlight: Vertex | None = None) -> str:
    """Render the orbit quiver ZD/G as a DOT digraph, one node per orbit."""
    diagram = atype.diagram
    nodes = sorted(
        {
            canonical_rep(atype, Vertex(x, t))
            for x in range(atype.period)
            for t in diagram.labels
        },
        key=Vertex.sort_key,
    )
    marked = canonical_rep(atype, highlight) if highlight is not None else None
    lines = ["digraph orbit_quiver {", "  rankdir=RL;"]
    for v in nodes:
        attrs = [f'label="{v}"']
        if v == marked:
            attrs.append("style=filled")
            attrs.append("fillcolor=lightgray")
        lines.append(f'  "{_node_id(v)}" [{", ".join(attrs)}];')
    edges = set()
    for v in nodes:
        for w in _mesh_successors(diagram, v):
            edges.add((v, canonical_rep(atype, w)))
    for v, w in sorted(edges, key=lambda e: (e[0].sort_key(), e[1].sort_key())):
        lines.append(f'  "{_node_id(v)}" -> "{_node_id(w)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
