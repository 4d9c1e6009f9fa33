"""The sum-closed poset of a decomposition, ordered by reverse inclusion.

``build_poset`` closes a component list under pairwise sums and identifies
equal sums; ``Poset.raw`` wraps an arbitrary finite order (used by the Roos
machinery and by tests on synthetic posets, where elements carry no ideal).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import InputError
from .ideals import Ideal, canonical_key, contains, ideal_sum, ideal_to_json, label
from .scomplex import SimplicialComplex


@dataclass(frozen=True)
class Poset:
    elements: tuple  # canonical ideals, or opaque labels for raw posets
    leq: tuple[tuple[bool, ...], ...]  # leq[p][q]: I_p contains I_q
    dims: tuple[int, ...] | None  # d_p per element; None for raw posets
    heights: tuple[int, ...] | None
    component_ids: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.elements)

    @property
    def is_ideal_poset(self) -> bool:
        return self.dims is not None

    def less(self, p: int, q: int) -> bool:
        return p != q and self.leq[p][q]

    def upward(self, p: int) -> tuple[int, ...]:
        return tuple(q for q in range(self.n) if self.leq[p][q])

    def maximal_elements(self) -> tuple[int, ...]:
        return tuple(p for p in range(self.n)
                     if not any(self.less(p, q) for q in range(self.n)))

    @classmethod
    def raw(cls, labels: Sequence, leq: Sequence[Sequence[bool]]) -> "Poset":
        n = len(labels)
        rel = tuple(tuple(bool(leq[p][q]) for q in range(n)) for p in range(n))
        for p in range(n):
            if not rel[p][p]:
                raise InputError("relation must be reflexive")
            for q in range(n):
                if rel[p][q] and rel[q][p] and p != q:
                    raise InputError("relation must be antisymmetric")
                for r in range(n):
                    if rel[p][q] and rel[q][r] and not rel[p][r]:
                        raise InputError("relation must be transitive")
        return cls(tuple(labels), rel, None, None, ())


@dataclass(frozen=True)
class Interval:
    """Open upper interval (q, 1^): all elements strictly above q."""

    parent: Poset
    bottom: int
    members: tuple[int, ...]


def build_poset(components: Sequence[Ideal]) -> Poset:
    """Close the components under pairwise sum, order by reverse inclusion.

    Elements are deterministic: sorted by (height, canonical form).  The
    original components are recorded in ``component_ids``; duplicates among
    them are rejected by name.
    """
    if not components:
        raise InputError("need at least one component")
    amb = components[0].ambient
    for c in components[1:]:
        if c.ambient != amb:
            raise InputError("components live in different ambient rings")
        if type(c) is not type(components[0]):
            raise InputError("components must all be linear or all pure-power")
    seen: dict = {}
    dups = []
    for c in components:
        if c in seen:
            dups.append(label(c))
        seen[c] = True
    if dups:
        raise InputError("duplicate components: " + ", ".join(sorted(set(dups))))

    closure = set(components)
    frontier = list(components)
    while frontier:
        nxt = []
        for a in frontier:
            for b in list(closure):
                s = ideal_sum(a, b)
                if s not in closure:
                    closure.add(s)
                    nxt.append(s)
        frontier = nxt
    elements = tuple(sorted(closure, key=canonical_key))
    n = len(elements)
    leq = tuple(tuple(contains(elements[p], elements[q]) for q in range(n)) for p in range(n))
    dims = tuple(e.quotient_dim for e in elements)
    heights = tuple(e.height for e in elements)
    comp_ids = tuple(elements.index(c) for c in components)
    return Poset(elements, leq, dims, heights, comp_ids)


def open_upper_interval(poset: Poset, q: int) -> Interval:
    if not (0 <= q < poset.n):
        raise InputError(f"element index {q} out of range")
    members = tuple(p for p in range(poset.n) if poset.less(q, p))
    return Interval(poset, q, members)


def _members_of(subject) -> tuple[Poset, tuple[int, ...]]:
    if isinstance(subject, Interval):
        return subject.parent, subject.members
    return subject, tuple(range(subject.n))


def _covers_within(poset: Poset, members: Sequence[int]) -> dict[int, list[int]]:
    mset = set(members)
    out: dict[int, list[int]] = {p: [] for p in members}
    for p in members:
        for q in members:
            if poset.less(p, q) and not any(
                    poset.less(p, z) and poset.less(z, q) for z in mset):
                out[p].append(q)
    return out


def order_complex(subject) -> SimplicialComplex:
    """Chains of a poset or interval as a simplicial complex.

    Facets are the maximal chains; an empty interval yields the void complex,
    matching the convention that its reduced homology sits in degree -1.
    """
    poset, members = _members_of(subject)
    if not members:
        return SimplicialComplex.void()
    covers = _covers_within(poset, members)
    mset = set(members)
    minimal = [p for p in members
               if not any(poset.less(q, p) for q in mset)]
    facets: list[frozenset] = []

    def extend(chain: list[int]) -> None:
        ups = covers[chain[-1]]
        if not ups:
            facets.append(frozenset(chain))
            return
        for q in ups:
            extend(chain + [q])

    for p in minimal:
        extend([p])
    return SimplicialComplex.from_facets(facets)


def poset_rank(subject) -> int:
    """Longest chain size minus one; equals dim of the order complex."""
    poset, members = _members_of(subject)
    if not members:
        return -1
    memo: dict[int, int] = {}

    def height_of(p: int) -> int:
        if p in memo:
            return memo[p]
        ups = [q for q in members if poset.less(p, q)]
        memo[p] = 1 + max((height_of(q) for q in ups), default=0)
        return memo[p]

    return max(height_of(p) for p in members) - 1


def hasse_edges(poset: Poset) -> list[tuple[int, int]]:
    """Cover pairs (p, q) with p < q and nothing strictly between."""
    edges = []
    for p in range(poset.n):
        for q in range(poset.n):
            if poset.less(p, q) and not any(
                    poset.less(p, z) and poset.less(z, q) for z in range(poset.n)):
                edges.append((p, q))
    return edges


def poset_to_json(poset: Poset) -> dict:
    if not poset.is_ideal_poset:
        raise InputError("only ideal posets are serializable")
    elements = []
    for idx, e in enumerate(poset.elements):
        elements.append({
            "index": idx,
            "label": label(e),
            "d": poset.dims[idx],
            "h": poset.heights[idx],
            "ideal": ideal_to_json(e),
        })
    return {
        "elements": elements,
        "cover_edges": [[p, q] for p, q in hasse_edges(poset)],
        "components": list(poset.component_ids),
    }
