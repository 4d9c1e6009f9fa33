"""Finite simplicial complexes, reduced homology over a field, links.

Two degenerate states are kept distinct: the VOID complex (no faces at all)
and the EMPTY complex (the empty face only).  Both have one unit of reduced
homology in degree -1; the void case is a stated convention (it encodes the
empty open interval of a poset), the empty case falls out of the augmented
boundary matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import InputError
from .exactlin import FieldSpec, Matrix, rank

Face = frozenset

BettiVector = dict  # dimension (>= -1) -> positive count; zeros omitted


def _face_key(face: Face):
    return (len(face), tuple(sorted(face)))


@dataclass(frozen=True)
class SimplicialComplex:
    facets: tuple[Face, ...]  # pairwise incomparable, deterministically sorted

    @classmethod
    def void(cls) -> "SimplicialComplex":
        return cls(())

    @classmethod
    def empty(cls) -> "SimplicialComplex":
        return cls((frozenset(),))

    @classmethod
    def from_facets(cls, faces: Iterable[Iterable]) -> "SimplicialComplex":
        candidates = {frozenset(f) for f in faces}
        maximal = [f for f in candidates
                   if not any(f < g for g in candidates)]
        return cls(tuple(sorted(maximal, key=_face_key)))

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def is_empty(self) -> bool:
        return self.facets == (frozenset(),)

    @property
    def vertices(self) -> tuple:
        vs = set()
        for f in self.facets:
            vs |= f
        return tuple(sorted(vs))

    @property
    def dim(self) -> int:
        # void and empty both report -1; rank(empty poset) matches
        if self.is_void:
            return -1
        return max(len(f) for f in self.facets) - 1

    def all_faces(self) -> list[Face]:
        out: set[Face] = set()
        for facet in self.facets:
            items = sorted(facet)
            for mask in range(1 << len(items)):
                out.add(frozenset(items[i] for i in range(len(items)) if mask >> i & 1))
        return sorted(out, key=_face_key)

    def faces(self, k: int) -> list[Face]:
        """Faces of dimension k (size k + 1), sorted; k = -1 is the empty face."""
        return [f for f in self.all_faces() if len(f) == k + 1]

    def has_face(self, sigma: Iterable) -> bool:
        s = frozenset(sigma)
        if self.is_void:
            return False
        return any(s <= f for f in self.facets)


def boundary_matrix(c: SimplicialComplex, k: int, field: FieldSpec | None = None) -> Matrix:
    """Boundary map from k-faces to (k-1)-faces with the augmentation at k=0.

    Orientation is the sorted vertex order; over F_2 the signs collapse.
    Composing two consecutive boundaries gives zero.
    """
    if k < 0:
        raise InputError("boundary index must be nonnegative")
    if field is None:
        field = FieldSpec()
    domain = c.faces(k)
    codomain = c.faces(k - 1)
    idx = {f: i for i, f in enumerate(codomain)}
    entries = [[field.zero] * len(domain) for _ in range(len(codomain))]
    for jcol, face in enumerate(domain):
        vs = sorted(face)
        for pos in range(len(vs)):
            sub = frozenset(vs[:pos] + vs[pos + 1:])
            sign = field.one if pos % 2 == 0 else field.neg(field.one)
            i = idx[sub]
            entries[i][jcol] = field.add(entries[i][jcol], sign)
    return Matrix.from_rows(field, entries, cols=len(domain))


def reduced_betti(c: SimplicialComplex, field: FieldSpec | None = None) -> BettiVector:
    """Reduced Betti numbers over the field, from exact boundary ranks.

    The void complex reports one unit in degree -1 by convention.
    """
    if field is None:
        field = FieldSpec()
    if c.is_void:
        return {-1: 1}
    top = c.dim
    face_counts = {k: len(c.faces(k)) for k in range(-1, top + 1)}
    ranks = {k: rank(boundary_matrix(c, k, field)) for k in range(0, top + 1)}
    ranks[top + 1] = 0
    betti: BettiVector = {}
    b_minus1 = face_counts[-1] - ranks.get(0, 0)
    if b_minus1:
        betti[-1] = b_minus1
    for k in range(0, top + 1):
        b = face_counts[k] - ranks[k] - ranks[k + 1]
        if b:
            betti[k] = b
    return betti


def link(c: SimplicialComplex, sigma: Iterable) -> SimplicialComplex:
    """Faces disjoint from sigma whose union with sigma is a face."""
    s = frozenset(sigma)
    if not c.has_face(s):
        raise InputError("sigma is not a face of the complex")
    return SimplicialComplex.from_facets(f - s for f in c.facets if s <= f)


def sr_complex(components) -> SimplicialComplex:
    """Stanley-Reisner complex of squarefree variable-generated components.

    Facets are the variable-set complements, so the complex's minimal primes
    are exactly the given components.
    """
    from .ideals import PurePowerIdeal

    if not components:
        raise InputError("need at least one component")
    d = components[0].ambient.d
    facets = []
    for comp in components:
        if not isinstance(comp, PurePowerIdeal) or not comp.is_squarefree:
            raise InputError("Stanley-Reisner dictionary needs squarefree pure-power components")
        if comp.ambient.d != d:
            raise InputError("components live in different ambient rings")
        facets.append(frozenset(range(d)) - frozenset(comp.support))
    return SimplicialComplex.from_facets(facets)


def euler_characteristic_reduced(c: SimplicialComplex) -> int:
    """Alternating face-count sum minus one (equals the alternating Betti sum)."""
    if c.is_void:
        return -1
    total = 0
    for f in c.all_faces():
        k = len(f) - 1
        total += 1 if k % 2 == 0 else -1
    return total
