"""Canonical ideals of the two supported classes and their graded pieces.

Two closed classes only: ideals spanned by linear forms (kept as an RREF
basis of the span) and monomial ideals generated by pure variable powers
(kept as a minimal exponent map).  Sums stay inside each class and canonical
forms are unique, so equality is literal comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Mapping, Sequence, Union

from .errors import InputError
from .exactlin import FieldSpec, Matrix, Scalar, kernel_basis, rank, rref

Monomial = tuple[int, ...]  # exponent vector of length d


@dataclass(frozen=True)
class AmbientRing:
    """Polynomial ring data: variable count, names, ground field."""

    d: int
    var_names: tuple[str, ...]
    field: FieldSpec

    def __post_init__(self) -> None:
        if self.d < 1:
            raise InputError("ambient ring needs at least one variable")
        if len(self.var_names) != self.d or len(set(self.var_names)) != self.d:
            raise InputError("variable names must be distinct and match the count")

    @classmethod
    def make(cls, d: int, field: FieldSpec | None = None,
             names: Sequence[str] | None = None) -> "AmbientRing":
        if field is None:
            field = FieldSpec()
        if names is None:
            names = tuple(f"x{i+1}" for i in range(d))
        return cls(d, tuple(names), field)

    def form_space_dim(self, j: int) -> int:
        """Dimension of the space of degree-j forms, C(j+d-1, j)."""
        return comb(j + self.d - 1, j) if j >= 0 else 0


def monomials_of_degree(j: int, d: int, allowed: Sequence[int] | None = None) -> list[Monomial]:
    """Degree-j exponent vectors supported on ``allowed``, descending lex.

    Descending lex by exponent tuple puts the x1-dominant monomial first;
    this fixed order makes every matrix and golden file deterministic.
    """
    if j < 0:
        return []
    vs = list(range(d)) if allowed is None else sorted(allowed)
    out: list[Monomial] = []

    def go(idx: int, remaining: int, acc: list[int]) -> None:
        if idx == len(vs) - 1:
            m = [0] * d
            for v, e in zip(vs, acc + [remaining]):
                m[v] = e
            out.append(tuple(m))
            return
        for e in range(remaining, -1, -1):
            go(idx + 1, remaining - e, acc + [e])

    if not vs:
        if j == 0:
            out.append((0,) * d)
        return out
    go(0, j, [])
    return out


@dataclass(frozen=True)
class LinearIdeal:
    """Ideal spanned by degree-1 forms; ``basis`` rows are the RREF basis."""

    ambient: AmbientRing
    basis: Matrix

    def __post_init__(self) -> None:
        if self.basis.cols != self.ambient.d:
            raise InputError("basis width must equal the variable count")
        red, rk, _ = rref(self.basis)
        if rk != self.basis.rows or red != self.basis:
            raise InputError("basis must be a reduced row echelon basis with no zero rows")
        if self.basis.rows == 0:
            raise InputError("the zero ideal is not a valid component")

    @classmethod
    def from_generators(cls, ambient: AmbientRing, rows: Sequence[Sequence]) -> "LinearIdeal":
        m = Matrix.from_rows(ambient.field, rows, cols=ambient.d)
        red, rk, _ = rref(m)
        kept = [red.row(i) for i in range(rk)]
        return cls(ambient, Matrix.from_rows(ambient.field, kept, cols=ambient.d))

    @property
    def height(self) -> int:
        return self.basis.rows

    @property
    def quotient_dim(self) -> int:
        return self.ambient.d - self.height

    @property
    def pivot_cols(self) -> tuple[int, ...]:
        return rref(self.basis).pivot_cols

    @property
    def free_vars(self) -> tuple[int, ...]:
        piv = set(self.pivot_cols)
        return tuple(v for v in range(self.ambient.d) if v not in piv)


@dataclass(frozen=True)
class PurePowerIdeal:
    """Monomial ideal generated by pure powers x_v^{e_v}; exponents minimal."""

    ambient: AmbientRing
    exps: tuple[tuple[int, int], ...]  # sorted (variable index, exponent >= 1)

    def __post_init__(self) -> None:
        if not self.exps:
            raise InputError("pure-power ideal needs a nonempty support")
        vs = [v for v, _ in self.exps]
        if vs != sorted(set(vs)):
            raise InputError("exponent map must be sorted with distinct variables")
        for v, e in self.exps:
            if not (0 <= v < self.ambient.d):
                raise InputError(f"variable index {v} out of range")
            if e < 1:
                raise InputError("exponents must be >= 1")

    @classmethod
    def from_exponents(cls, ambient: AmbientRing, exps: Mapping[int, int]) -> "PurePowerIdeal":
        return cls(ambient, tuple(sorted((int(v), int(e)) for v, e in exps.items())))

    @property
    def exp_map(self) -> dict[int, int]:
        return dict(self.exps)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(v for v, _ in self.exps)

    @property
    def height(self) -> int:
        return len(self.exps)

    @property
    def quotient_dim(self) -> int:
        return self.ambient.d - self.height

    @property
    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self.exps)

    def contains_monomial(self, m: Monomial) -> bool:
        return any(m[v] >= e for v, e in self.exps)


Ideal = Union[LinearIdeal, PurePowerIdeal]


def _check_compatible(i1: Ideal, i2: Ideal) -> None:
    if i1.ambient != i2.ambient:
        raise InputError("ideals live in different ambient rings")
    if type(i1) is not type(i2):
        raise InputError("cannot mix linear and pure-power ideals")


def ideal_sum(i1: Ideal, i2: Ideal) -> Ideal:
    """Canonical form of i1 + i2 within the shared class."""
    _check_compatible(i1, i2)
    if isinstance(i1, LinearIdeal):
        stacked = i1.basis.stack(i2.basis)
        return LinearIdeal.from_generators(i1.ambient, stacked.row_lists())
    e1, e2 = i1.exp_map, i2.exp_map
    merged = {v: min(e for e in (e1.get(v), e2.get(v)) if e is not None)
              for v in set(e1) | set(e2)}
    return PurePowerIdeal.from_exponents(i1.ambient, merged)


def ideal_eq(i1: Ideal, i2: Ideal) -> bool:
    if i1.ambient != i2.ambient:
        raise InputError("ideals live in different ambient rings")
    return i1 == i2


def contains(big: Ideal, small: Ideal) -> bool:
    """True iff small is contained in big (same class, same ambient)."""
    _check_compatible(big, small)
    if isinstance(big, LinearIdeal):
        stacked = big.basis.stack(small.basis)
        return rank(stacked) == big.height
    be = big.exp_map
    return all(v in be and e >= be[v] for v, e in small.exps)


def height(i: Ideal) -> int:
    return i.height


def quotient_dim(i: Ideal) -> int:
    return i.quotient_dim


def canonical_key(i: Ideal):
    """Total order key for deterministic element ordering."""
    if isinstance(i, LinearIdeal):
        return (0, i.basis.rows, tuple(Fraction(x) if i.ambient.field.is_rational else x
                                       for x in i.basis.entries))
    return (1, len(i.exps), i.exps)


def _coeff_str(c: Scalar) -> str:
    return str(c)


def _linear_form_str(row: Sequence[Scalar], names: Sequence[str]) -> str:
    parts: list[str] = []
    for v, c in enumerate(row):
        if c == 0:
            continue
        if isinstance(c, Fraction):
            neg, mag = c < 0, abs(c)
        else:
            neg, mag = False, c
        term = names[v] if mag == 1 else f"{_coeff_str(mag)}*{names[v]}"
        if not parts:
            parts.append(("-" if neg else "") + term)
        else:
            parts.append(("- " if neg else "+ ") + term)
    return " ".join(parts) if parts else "0"


def label(i: Ideal) -> str:
    """Human-readable generator list, e.g. ``(x1, x2 - x3)`` or ``(x^2, y)``."""
    names = i.ambient.var_names
    if isinstance(i, LinearIdeal):
        gens = [_linear_form_str(i.basis.row(r), names) for r in range(i.basis.rows)]
    else:
        gens = [names[v] if e == 1 else f"{names[v]}^{e}" for v, e in i.exps]
    return "(" + ", ".join(gens) + ")"


def ideal_to_json(i: Ideal) -> dict:
    if isinstance(i, LinearIdeal):
        basis = [[_scalar_to_json(x) for x in i.basis.row(r)] for r in range(i.basis.rows)]
        return {"kind": "linear", "basis": basis}
    return {"kind": "monomial", "exps": {i.ambient.var_names[v]: e for v, e in i.exps}}


def _scalar_to_json(x: Scalar):
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else str(x)
    return x


def quotient_degree_basis(i: Ideal, j: int) -> list[Monomial]:
    """Monomial basis of (A/I)_j in the fixed descending-lex order.

    Linear ideals: monomials of degree j in the free (non-pivot) variables.
    Pure-power ideals: standard monomials, i.e. those not divisible by any
    generator.
    """
    if j < 0:
        raise InputError("degree must be nonnegative")
    d = i.ambient.d
    if isinstance(i, LinearIdeal):
        return monomials_of_degree(j, d, i.free_vars)
    return [m for m in monomials_of_degree(j, d) if not i.contains_monomial(m)]


def quotient_degree_dim(i: Ideal, j: int) -> int:
    return len(quotient_degree_basis(i, j))


def _poly_mul(p1: dict[Monomial, Scalar], p2: dict[Monomial, Scalar],
              field: FieldSpec) -> dict[Monomial, Scalar]:
    out: dict[Monomial, Scalar] = {}
    for m1, c1 in p1.items():
        for m2, c2 in p2.items():
            m = tuple(a + b for a, b in zip(m1, m2))
            c = field.mul(c1, c2)
            acc = field.add(out.get(m, field.zero), c)
            if acc == 0:
                out.pop(m, None)
            else:
                out[m] = acc
    return out


def _substitution_table(big: LinearIdeal) -> dict[int, dict[Monomial, Scalar]]:
    """Per-variable rewriting polynomials modulo ``big``.

    Each pivot variable of the RREF basis maps to minus its row's free-variable
    part; free variables map to themselves.  One pass is a normal form because
    RREF rows involve no other pivots.
    """
    amb = big.ambient
    f = amb.field
    d = amb.d
    table: dict[int, dict[Monomial, Scalar]] = {}
    pivots = big.pivot_cols
    for v in range(d):
        unit = tuple(1 if w == v else 0 for w in range(d))
        table[v] = {unit: f.one}
    for r, pv in enumerate(pivots):
        row = big.basis.row(r)
        poly: dict[Monomial, Scalar] = {}
        for w in big.free_vars:
            if row[w] != 0:
                unit = tuple(1 if u == w else 0 for u in range(d))
                poly[unit] = f.neg(row[w])
        table[pv] = poly
    return table


def projection_matrix(i_small: Ideal, i_big: Ideal, j: int) -> Matrix:
    """Matrix of the surjection (A/i_small)_j -> (A/i_big)_j.

    Bases on both sides are the ``quotient_degree_basis`` monomials.  For
    linear ideals each source monomial is rewritten by substituting the pivot
    variables of ``i_big`` and expanding; for pure-power ideals the map kills
    monomials lying in ``i_big`` and fixes the rest.
    """
    _check_compatible(i_small, i_big)
    if not contains(i_big, i_small):
        raise InputError("projection requires i_small to be contained in i_big")
    f = i_small.ambient.field
    src = quotient_degree_basis(i_small, j)
    tgt = quotient_degree_basis(i_big, j)
    tgt_index = {m: k for k, m in enumerate(tgt)}
    columns: list[list[Scalar]] = []
    if isinstance(i_big, PurePowerIdeal):
        for m in src:
            col = [f.zero] * len(tgt)
            if m in tgt_index:
                col[tgt_index[m]] = f.one
            columns.append(col)
    else:
        table = _substitution_table(i_big)
        for m in src:
            poly: dict[Monomial, Scalar] = {(0,) * i_small.ambient.d: f.one}
            for v, e in enumerate(m):
                for _ in range(e):
                    poly = _poly_mul(poly, table[v], f)
            col = [f.zero] * len(tgt)
            for mono, c in poly.items():
                col[tgt_index[mono]] = c
            columns.append(col)
    entries = tuple(columns[c][r] for r in range(len(tgt)) for c in range(len(src)))
    return Matrix(len(tgt), len(src), f, entries)


@dataclass(frozen=True)
class Subspace:
    """Subspace of the degree-j forms, rows = RREF basis in monomial coordinates."""

    ambient: AmbientRing
    degree: int
    basis: Matrix

    @property
    def dim(self) -> int:
        return self.basis.rows

    @property
    def space_dim(self) -> int:
        return self.basis.cols


def _subspace_from_rows(ambient: AmbientRing, j: int, rows: list[list[Scalar]]) -> Subspace:
    n = ambient.form_space_dim(j)
    m = Matrix.from_rows(ambient.field, rows, cols=n)
    red, rk, _ = rref(m)
    kept = [red.row(r) for r in range(rk)]
    return Subspace(ambient, j, Matrix.from_rows(ambient.field, kept, cols=n))


def degree_piece(i: Ideal, j: int) -> Subspace:
    """The degree-j piece I_j inside the space of degree-j forms."""
    if j < 0:
        raise InputError("degree must be nonnegative")
    amb = i.ambient
    f = amb.field
    monos = monomials_of_degree(j, amb.d)
    index = {m: k for k, m in enumerate(monos)}
    rows: list[list[Scalar]] = []
    if isinstance(i, PurePowerIdeal):
        for m in monos:
            if i.contains_monomial(m):
                row = [f.zero] * len(monos)
                row[index[m]] = f.one
                rows.append(row)
    else:
        for r in range(i.basis.rows):
            gen = i.basis.row(r)
            for m in monomials_of_degree(j - 1, amb.d):
                row = [f.zero] * len(monos)
                for v, c in enumerate(gen):
                    if c != 0:
                        shifted = tuple(e + (1 if w == v else 0) for w, e in enumerate(m))
                        row[index[shifted]] = f.add(row[index[shifted]], c)
                rows.append(row)
    return _subspace_from_rows(amb, j, rows)


def sum_degree_pieces(ideals: Sequence[Ideal], j: int) -> Subspace:
    if not ideals:
        raise InputError("need at least one ideal")
    amb = ideals[0].ambient
    rows: list[list[Scalar]] = []
    for i in ideals:
        if i.ambient != amb:
            raise InputError("ideals live in different ambient rings")
        rows.extend(degree_piece(i, j).basis.row_lists())
    return _subspace_from_rows(amb, j, rows)


def intersect_degree_pieces(ideals: Sequence[Ideal], j: int) -> Subspace:
    """Degree-j piece of the intersection, via annihilators in the dual.

    (U cap W) has annihilator ann(U) + ann(W) under the coordinate pairing,
    and ann(U) is the kernel of U's basis matrix; both steps are exact row
    reductions, valid over any field.
    """
    if not ideals:
        raise InputError("need at least one ideal")
    amb = ideals[0].ambient
    f = amb.field
    n = amb.form_space_dim(j)
    ann_rows: list[list[Scalar]] = []
    for i in ideals:
        if i.ambient != amb:
            raise InputError("ideals live in different ambient rings")
        ker = kernel_basis(degree_piece(i, j).basis)  # columns annihilate U
        ann_rows.extend(ker.transpose().row_lists())
    ann = Matrix.from_rows(f, ann_rows, cols=n)
    result = kernel_basis(ann).transpose()
    return _subspace_from_rows(amb, j, result.row_lists())


def subspace_eq(s1: Subspace, s2: Subspace) -> bool:
    return s1.degree == s2.degree and s1.basis == s2.basis


def subspace_sum(s1: Subspace, s2: Subspace) -> Subspace:
    if s1.ambient != s2.ambient or s1.degree != s2.degree:
        raise InputError("subspaces live in different graded pieces")
    rows = s1.basis.row_lists() + s2.basis.row_lists()
    return _subspace_from_rows(s1.ambient, s1.degree, rows)


def subspace_intersection(s1: Subspace, s2: Subspace) -> Subspace:
    if s1.ambient != s2.ambient or s1.degree != s2.degree:
        raise InputError("subspaces live in different graded pieces")
    f = s1.ambient.field
    n = s1.basis.cols
    ann_rows = (kernel_basis(s1.basis).transpose().row_lists()
                + kernel_basis(s2.basis).transpose().row_lists())
    ann = Matrix.from_rows(f, ann_rows, cols=n)
    return _subspace_from_rows(s1.ambient, s1.degree, kernel_basis(ann).transpose().row_lists())
