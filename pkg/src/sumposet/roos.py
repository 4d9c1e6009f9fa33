"""Roos complexes of finite inverse/direct systems and the limit diagnostics.

A system assigns a finite-dimensional space to every poset element, degree by
degree, with structural matrices along comparable pairs.  The cochain complex
indexed by strictly increasing chains computes the right derived limits; its
chain-complex dual computes the left derived colimits.  Chains are enumerated
in lexicographic index order so every matrix is reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import InputError
from .exactlin import FieldSpec, Matrix, kernel_basis, rank
from .ideals import (Ideal, LinearIdeal, degree_piece, ideal_sum,
                     intersect_degree_pieces, label, monomials_of_degree,
                     projection_matrix, quotient_degree_dim)
from .poset import Poset, build_poset, poset_rank

INVERSE = "inverse"
DIRECT = "direct"


@dataclass(frozen=True, eq=False)
class VectorSystem:
    """Degree-wise finite-dimensional system over a poset.

    ``dims[(p, j)]`` is the dimension at element p in degree j.  For an
    inverse system ``maps[(p, q, j)]`` carries value(q) -> value(p) along
    p <= q; for a direct system it carries value(p) -> value(q).  Maps must
    compose functorially along chains.
    """

    poset: Poset
    direction: str
    field: FieldSpec
    degrees: tuple[int, ...]
    dims: Mapping
    maps: Mapping

    def dim(self, p: int, j: int = 0) -> int:
        return self.dims[(p, j)]

    def map(self, p: int, q: int, j: int = 0) -> Matrix:
        return self.maps[(p, q, j)]


@dataclass(frozen=True, eq=False)
class RoosComplexInstance:
    """One degree slice of a Roos complex: spots, chains and differentials.

    ``chains[k]`` lists the strictly increasing (k+1)-element chains; the
    summand of a chain is the system's value at its minimum.  For the
    cochain version ``differentials[k]`` maps spot k to spot k+1; for the
    chain version it maps spot k to spot k-1 (index 0 unused).
    """

    degree: int
    direction: str
    chains: tuple[tuple[tuple[int, ...], ...], ...]
    spot_dims: tuple[int, ...]
    differentials: tuple[Matrix, ...]


def _comparable_pairs(poset: Poset) -> list[tuple[int, int]]:
    return [(p, q) for p in range(poset.n) for q in range(poset.n) if poset.less(p, q)]


def _all_chains(poset: Poset) -> list[list[tuple[int, ...]]]:
    """Chains grouped by length, each group in lexicographic index order."""
    rk = poset_rank(poset)
    by_k: list[list[tuple[int, ...]]] = [[] for _ in range(rk + 1)]
    n = poset.n

    def extend(chain: tuple[int, ...]) -> None:
        k = len(chain) - 1
        by_k[k].append(chain)
        last = chain[-1]
        for q in range(n):
            if poset.less(last, q):
                extend(chain + (q,))

    for p in range(n):
        extend((p,))
    for group in by_k:
        group.sort()
    return by_k


def constant_system(poset: Poset, n: int, direction: str,
                    field: FieldSpec | None = None) -> VectorSystem:
    if n < 0:
        raise InputError("dimension must be nonnegative")
    if direction not in (INVERSE, DIRECT):
        raise InputError(f"unknown direction {direction!r}")
    if field is None:
        field = FieldSpec()
    dims = {(p, 0): n for p in range(poset.n)}
    ident = Matrix.identity(field, n)
    maps = {(p, q, 0): ident for p, q in _comparable_pairs(poset)}
    return VectorSystem(poset, direction, field, (0,), dims, maps)


def skyscraper_system(poset: Poset, q: int, n: int,
                      field: FieldSpec | None = None) -> VectorSystem:
    """Direct system with value n at q, zero elsewhere, zero maps."""
    if not (0 <= q < poset.n):
        raise InputError(f"element index {q} out of range")
    if n < 0:
        raise InputError("dimension must be nonnegative")
    if field is None:
        field = FieldSpec()
    dims = {(p, 0): (n if p == q else 0) for p in range(poset.n)}
    maps = {}
    for p, r in _comparable_pairs(poset):
        maps[(p, r, 0)] = Matrix.zero(field, dims[(r, 0)], dims[(p, 0)])
    return VectorSystem(poset, DIRECT, field, (0,), dims, maps)


def quotient_system(poset: Poset, jmax: int) -> VectorSystem:
    """Inverse system p -> (A/I_p)_j with projection maps, for all j <= jmax."""
    if jmax < 0:
        raise InputError("degree bound must be nonnegative")
    if not poset.is_ideal_poset:
        raise InputError("quotient system needs an ideal-backed poset")
    field = poset.elements[0].ambient.field
    degrees = tuple(range(jmax + 1))
    dims = {}
    for p in range(poset.n):
        for j in degrees:
            dims[(p, j)] = quotient_degree_dim(poset.elements[p], j)
    maps = {}
    for p, q in _comparable_pairs(poset):
        # p <= q means I_p contains I_q; the surjection (A/I_q)_j -> (A/I_p)_j
        for j in degrees:
            maps[(p, q, j)] = projection_matrix(poset.elements[q], poset.elements[p], j)
    return VectorSystem(poset, INVERSE, field, degrees, dims, maps)


def _spot_layout(system: VectorSystem, chains: Sequence[tuple[int, ...]], j: int):
    offsets = []
    total = 0
    for ch in chains:
        offsets.append(total)
        total += system.dim(ch[0], j)
    return offsets, total


def roos_cochain(system: VectorSystem, j: int = 0) -> RoosComplexInstance:
    """Cochain complex of an inverse system in one degree.

    The component of d^k landing in the factor of a chain (p_0 < ... <
    p_{k+1}) is the structural map applied to the chain with p_0 dropped,
    plus the alternating-sign identities for the inner drops.
    """
    if system.direction != INVERSE:
        raise InputError("roos_cochain needs an inverse system")
    return _roos_instance(system, j, cochain=True)


def roos_chain(system: VectorSystem, j: int = 0) -> RoosComplexInstance:
    """Chain complex of a direct system in one degree."""
    if system.direction != DIRECT:
        raise InputError("roos_chain needs a direct system")
    return _roos_instance(system, j, cochain=False)


def _roos_instance(system: VectorSystem, j: int, cochain: bool) -> RoosComplexInstance:
    poset = system.poset
    f = system.field
    by_k = _all_chains(poset)
    spot_dims = []
    layouts = []
    for chains in by_k:
        offs, total = _spot_layout(system, chains, j)
        layouts.append((offs, {ch: o for ch, o in zip(chains, offs)}))
        spot_dims.append(total)
    diffs: list[Matrix] = []
    for k in range(len(by_k) - 1):
        long_chains = by_k[k + 1]
        short_chains = by_k[k]
        _, short_index = layouts[k]
        long_offs, _ = layouts[k + 1]
        if cochain:
            nrows, ncols = spot_dims[k + 1], spot_dims[k]
        else:
            nrows, ncols = spot_dims[k], spot_dims[k + 1]
        entries = [[f.zero] * ncols for _ in range(nrows)]

        def add_block(r0: int, c0: int, block: Matrix, sign: int) -> None:
            for r in range(block.rows):
                for c in range(block.cols):
                    v = block[r, c]
                    if v != 0:
                        if sign < 0:
                            v = f.neg(v)
                        entries[r0 + r][c0 + c] = f.add(entries[r0 + r][c0 + c], v)

        for idx, ch in enumerate(long_chains):
            long_off = long_offs[idx]
            for drop in range(len(ch)):
                sub = ch[:drop] + ch[drop + 1:]
                short_off = short_index[sub]
                if drop == 0:
                    block = system.map(ch[0], ch[1], j)
                    sign = 1
                else:
                    dim0 = system.dim(ch[0], j)
                    block = Matrix.identity(f, dim0)
                    sign = 1 if drop % 2 == 0 else -1
                if cochain:
                    # component into the long-chain factor, from the short chain
                    add_block(long_off, short_off, block, sign)
                else:
                    # component out of the long-chain summand, into the short chain
                    add_block(short_off, long_off, block, sign)
        diffs.append(Matrix(nrows, ncols, f, tuple(x for row in entries for x in row)))
    return RoosComplexInstance(
        degree=j,
        direction=INVERSE if cochain else DIRECT,
        chains=tuple(tuple(chains) for chains in by_k),
        spot_dims=tuple(spot_dims),
        differentials=tuple(diffs),
    )


def derived_lim_dims(system: VectorSystem, j: int = 0) -> list[int]:
    """[dim R^i lim] for i = 0..rank(P); index 0 is the limit itself."""
    inst = roos_cochain(system, j)
    return cohomology_dims(inst)


def derived_colim_dims(system: VectorSystem, j: int = 0) -> list[int]:
    """[dim L_i colim] for i = 0..rank(P); index 0 is the colimit."""
    inst = roos_chain(system, j)
    return homology_dims(inst)


def cohomology_dims(inst: RoosComplexInstance) -> list[int]:
    if inst.direction != INVERSE:
        raise InputError("cohomology of a chain instance is not defined here")
    spots = inst.spot_dims
    ranks = [rank(d) for d in inst.differentials]
    out = []
    for i in range(len(spots)):
        r_out = ranks[i] if i < len(ranks) else 0
        r_in = ranks[i - 1] if i >= 1 else 0
        out.append(spots[i] - r_out - r_in)
    return out


def homology_dims(inst: RoosComplexInstance) -> list[int]:
    if inst.direction != DIRECT:
        raise InputError("homology of a cochain instance is not defined here")
    spots = inst.spot_dims
    # differentials[k] maps spot k+1 to spot k
    ranks = [rank(d) for d in inst.differentials]
    out = []
    for i in range(len(spots)):
        r_in = ranks[i] if i < len(ranks) else 0
        r_out = ranks[i - 1] if i >= 1 else 0
        out.append(spots[i] - r_in - r_out)
    return out


def reduced_cohomology_via_roos(poset: Poset, field: FieldSpec | None = None) -> dict:
    """Reduced Betti numbers of the order complex, via the coaugmented complex.

    The bare Roos cochain of the constant system has the (unreduced) limit in
    degree 0, so the diagonal coaugmentation is glued in front before taking
    cohomology; the result matches scomplex.reduced_betti on the order complex.
    """
    if field is None:
        field = FieldSpec()
    system = constant_system(poset, 1, INVERSE, field)
    inst = roos_cochain(system, 0)
    spots = inst.spot_dims
    coaug = Matrix.from_rows(field, [[field.one]] * spots[0], cols=1)
    ranks = [rank(coaug)] + [rank(d) for d in inst.differentials]
    betti: dict[int, int] = {}
    b_minus1 = 1 - ranks[0]
    if b_minus1:
        betti[-1] = b_minus1
    for i in range(len(spots)):
        r_in = ranks[i]
        r_out = ranks[i + 1] if i + 1 < len(ranks) else 0
        b = spots[i] - r_in - r_out
        if b:
            betti[i] = b
    return betti


@dataclass(frozen=True)
class LimitRow:
    degree: int
    dim_quotient: int
    dim_lim: int
    defect: int
    higher: tuple[int, ...]


@dataclass(frozen=True)
class LimitReport:
    poset: Poset
    max_degree: int
    rows: tuple[LimitRow, ...]
    distributive: bool
    failure_degree: int | None
    witnesses: tuple[tuple[int, int, int], ...]  # (p, q, r) triples at the failure degree

    @property
    def max_defect(self) -> int:
        return max(row.defect for row in self.rows)

    def to_json(self) -> dict:
        labels = [label(e) for e in self.poset.elements]
        return {
            "max_degree": self.max_degree,
            "table": [
                {"j": r.degree, "dim_quotient": r.dim_quotient, "dim_lim": r.dim_lim,
                 "defect": r.defect, "higher": list(r.higher)}
                for r in self.rows
            ],
            "distributive": self.distributive,
            "failure_degree": self.failure_degree,
            "witnesses": [
                {"p": labels[p], "q": labels[q], "r": labels[r]}
                for p, q, r in self.witnesses
            ],
        }


def _quotient_degree_dim_of_intersection(components: Sequence[Ideal], j: int) -> int:
    """dim (A / (I_1 cap ... cap I_n))_j, computed without the limit."""
    amb = components[0].ambient
    if isinstance(components[0], LinearIdeal):
        return amb.form_space_dim(j) - intersect_degree_pieces(components, j).dim
    count = 0
    for m in monomials_of_degree(j, amb.d):
        if not all(c.contains_monomial(m) for c in components):
            count += 1
    return count


def _incomparable_triples(poset: Poset) -> list[tuple[int, int, int]]:
    """Triples (p < q, r) with p, q, r pairwise incomparable.

    Ideals form a modular lattice, so distributivity of a triple holds
    automatically as soon as two of its members are comparable; only the
    pairwise-incomparable triples can fail.
    """
    def comparable(a: int, b: int) -> bool:
        return poset.leq[a][b] or poset.leq[b][a]

    out = []
    for p in range(poset.n):
        for q in range(p + 1, poset.n):
            if comparable(p, q):
                continue
            for r in range(poset.n):
                if r in (p, q) or comparable(p, r) or comparable(q, r):
                    continue
                out.append((p, q, r))
    return out


def _distributivity_failures(poset: Poset, j: int) -> list[tuple[int, int, int]]:
    """Triples (p, q, r) where ((I_p+I_q) cap I_r)_j != (I_p cap I_r + I_q cap I_r)_j.

    The right side always sits inside the left, so equality is a dimension
    comparison.  For pure-power input the graded pieces are monomial sets;
    for linear input the dimensions come from annihilator ranks, cached per
    element subset: dim(cap of pieces) = N - rank(stacked annihilators).
    """
    elems = poset.elements
    n = poset.n
    index = {e: i for i, e in enumerate(elems)}
    triples = _incomparable_triples(poset)
    if not triples:
        return []

    if not isinstance(elems[0], LinearIdeal):
        monos = monomials_of_degree(j, elems[0].ambient.d)
        pieces = [frozenset(m for m in monos if e.contains_monomial(m)) for e in elems]
        fails = []
        for p, q, r in triples:
            s = index[ideal_sum(elems[p], elems[q])]
            lhs = pieces[s] & pieces[r]
            rhs = (pieces[p] & pieces[r]) | (pieces[q] & pieces[r])
            if lhs != rhs:
                fails.append((p, q, r))
        return fails

    ambient = elems[0].ambient
    field = ambient.field
    space_dim = ambient.form_space_dim(j)
    ann_rows = [kernel_basis(degree_piece(e, j).basis).transpose().row_lists()
                for e in elems]
    dim_cache: dict[frozenset, int] = {}

    def intersection_dim(*xs: int) -> int:
        key = frozenset(xs)
        if key not in dim_cache:
            stacked = [row for x in sorted(key) for row in ann_rows[x]]
            m = Matrix.from_rows(field, stacked, cols=space_dim)
            dim_cache[key] = space_dim - rank(m)
        return dim_cache[key]

    fails = []
    for p, q, r in triples:
        s = index[ideal_sum(elems[p], elems[q])]
        lhs = intersection_dim(s, r)
        rhs = (intersection_dim(p, r) + intersection_dim(q, r)
               - intersection_dim(p, q, r))
        if lhs != rhs:
            fails.append((p, q, r))
    return fails


def limit_check(components: Sequence[Ideal], max_degree: int = 6) -> LimitReport:
    """Degree-wise comparison of A/I with the limit, plus distributivity.

    For each j <= max_degree the quotient dimension is computed directly from
    the intersection (subspaces for linear input, monomial counting for
    pure-power input) while the limit dimension comes from the Roos cochain;
    the defect is their gap.  The distributivity scan reports every failing
    triple at the first failing degree.
    """
    poset = build_poset(components)
    system = quotient_system(poset, max_degree)
    rows = []
    for j in range(max_degree + 1):
        dims = derived_lim_dims(system, j)
        dim_lim = dims[0]
        dim_quot = _quotient_degree_dim_of_intersection(components, j)
        rows.append(LimitRow(j, dim_quot, dim_lim, dim_lim - dim_quot, tuple(dims[1:])))
    failure_degree = None
    witnesses: tuple[tuple[int, int, int], ...] = ()
    for j in range(max_degree + 1):
        fails = _distributivity_failures(poset, j)
        if fails:
            failure_degree = j
            witnesses = tuple(fails)
            break
    return LimitReport(
        poset=poset,
        max_degree=max_degree,
        rows=tuple(rows),
        distributive=failure_degree is None,
        failure_degree=failure_degree,
        witnesses=witnesses,
    )
