"""Classical link-based Hochster computation, used as an independent oracle.

For squarefree monomial input the coarse Z-graded series of local cohomology
can be read off the Stanley-Reisner complex alone: each face sigma contributes
the reduced cohomology of its link at exponent |sigma|.  Nothing here touches
the poset pipeline, which is the point.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .decomp import (HilbertSeries, hilbert_series, laurent_expansion, mult_M,
                     regularity)
from .errors import RefusalError
from .exactlin import FieldSpec
from .ideals import Ideal, PurePowerIdeal
from .poset import build_poset
from .scomplex import SimplicialComplex, link, reduced_betti, sr_complex


def _link_betti_by_face(delta: SimplicialComplex, field: FieldSpec) -> dict:
    return {sigma: reduced_betti(link(delta, sigma), field)
            for sigma in delta.all_faces()}


def link_hochster_series(delta: SimplicialComplex, i: int,
                         field: FieldSpec | None = None,
                         _betti=None) -> HilbertSeries:
    """Sum over faces of betti[i - |sigma| - 1](link sigma) at exponent |sigma|."""
    if field is None:
        field = FieldSpec()
    betti = _betti if _betti is not None else _link_betti_by_face(delta, field)
    data: dict[int, int] = {}
    for sigma, vec in betti.items():
        b = vec.get(i - len(sigma) - 1, 0)
        if b:
            e = len(sigma)
            data[e] = data.get(e, 0) + b
    return HilbertSeries.from_map(data)


def oracle_series_table(delta: SimplicialComplex,
                        field: FieldSpec | None = None) -> dict:
    """All cohomological indices with a nonzero series, computed in one pass."""
    if field is None:
        field = FieldSpec()
    betti = _link_betti_by_face(delta, field)
    indices = sorted({idx + len(sigma) + 1
                      for sigma, vec in betti.items() for idx in vec})
    return {i: link_hochster_series(delta, i, field, _betti=betti) for i in indices}


def oracle_regularity(delta: SimplicialComplex, field: FieldSpec | None = None) -> int:
    """max of i - |sigma| over nonzero link cohomology; the regularity of K[Delta]."""
    if field is None:
        field = FieldSpec()
    best = None
    for sigma, vec in _link_betti_by_face(delta, field).items():
        for idx in vec:
            val = idx + 1  # i - |sigma| with i = idx + |sigma| + 1
            best = val if best is None else max(best, val)
    if best is None:
        raise RefusalError("complex has no reduced cohomology at all")
    return best


@dataclass(frozen=True)
class ComparisonVerdict:
    equal: bool
    first_mismatch: str | None
    poset_regularity: int
    oracle_regularity: int
    indices: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "equal": self.equal,
            "first_mismatch": self.first_mismatch,
            "poset_regularity": self.poset_regularity,
            "oracle_regularity": self.oracle_regularity,
            "indices": list(self.indices),
        }


def compare(components: Sequence[Ideal], depth: int = 10,
            field: FieldSpec | None = None) -> ComparisonVerdict:
    """Cross-validate the poset pipeline against the link oracle.

    Requires squarefree pure-power components.  Checks, for every
    cohomological index with support on either side: exact equality of the
    series coefficient maps, equality of the truncated Laurent expansions,
    and finally equality of the two regularity computations.
    """
    for c in components:
        if not isinstance(c, PurePowerIdeal) or not c.is_squarefree:
            raise RefusalError("oracle comparison supports squarefree monomial input only")
    if field is None:
        field = components[0].ambient.field
    poset = build_poset(components)
    report = mult_M(poset, field)
    delta = sr_complex(components)
    oracle_table = oracle_series_table(delta, field)
    poset_table = {i: hilbert_series(poset, i=i, report=report)
                   for i in report.nonzero_indices()}
    indices = sorted(set(oracle_table) | set(poset_table))
    mismatch = None
    for i in indices:
        left = poset_table.get(i, HilbertSeries(()))
        right = oracle_table.get(i, HilbertSeries(()))
        if left.coeffs != right.coeffs:
            mismatch = f"series coefficients differ at i={i}: {left} vs {right}"
            break
        if laurent_expansion(left, depth) != laurent_expansion(right, depth):
            mismatch = f"Laurent expansions differ at i={i}"
            break
    preg = regularity(poset, report=report)
    oreg = oracle_regularity(delta, field)
    if mismatch is None and preg != oreg:
        mismatch = f"regularity differs: poset {preg} vs oracle {oreg}"
    return ComparisonVerdict(mismatch is None, mismatch, preg, oreg, tuple(indices))


def random_squarefree_components(rng: random.Random, d: int,
                                 n_components: int) -> list[PurePowerIdeal]:
    """Random antichain of variable subsets as squarefree components.

    Supports are drawn uniformly among nonempty proper subsets and pruned to
    an antichain, so the result is a minimal decomposition; at least one
    component always survives.
    """
    from .ideals import AmbientRing

    ambient = AmbientRing.make(d)
    supports: list[frozenset] = []
    attempts = 0
    while len(supports) < n_components and attempts < 50 * n_components:
        attempts += 1
        size = rng.randint(1, max(1, d - 1))
        s = frozenset(rng.sample(range(d), size))
        if any(s <= t or t <= s for t in supports):
            continue
        supports.append(s)
    supports.sort(key=lambda s: tuple(sorted(s)))
    return [PurePowerIdeal.from_exponents(ambient, {v: 1 for v in s}) for s in supports]


def random_complex(rng: random.Random, n_vertices: int, n_facets: int) -> SimplicialComplex:
    """Random small complex: candidate facets pruned to the maximal ones."""
    faces = []
    for _ in range(n_facets):
        size = rng.randint(1, n_vertices)
        faces.append(frozenset(rng.sample(range(n_vertices), size)))
    return SimplicialComplex.from_facets(faces)
