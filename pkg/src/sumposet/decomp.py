"""Decomposition multiplicities, Hilbert series, regularity, D-module data.

Everything here is read off one table: the reduced Betti numbers of the order
complexes of the open upper intervals (q, 1^).  Over a field, cohomology and
homology dimensions agree, so one homology computation per interval feeds
both decomposition flavors.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

from .errors import InputError, RefusalError
from .exactlin import FieldSpec
from .ideals import Ideal, PurePowerIdeal, contains, ideal_to_json, label
from .poset import Poset, open_upper_interval, order_complex
from .roos import LimitReport, limit_check
from .scomplex import BettiVector, reduced_betti

HOCHSTER = "hochster"
TERAI = "terai"


@dataclass(frozen=True, eq=False)
class IntervalBettiTable:
    poset: Poset
    field: FieldSpec
    betti: tuple[BettiVector, ...]  # one vector per element, index-aligned

    def vector(self, q: int) -> BettiVector:
        return self.betti[q]


def interval_betti_table(poset: Poset, field: FieldSpec | None = None) -> IntervalBettiTable:
    """Reduced Betti numbers of every open upper interval of the poset."""
    if not poset.is_ideal_poset:
        raise InputError("interval tables need an ideal-backed poset")
    if field is None:
        field = poset.elements[0].ambient.field
    vectors = tuple(reduced_betti(order_complex(open_upper_interval(poset, q)), field)
                    for q in range(poset.n))
    return IntervalBettiTable(poset, field, vectors)


@dataclass(frozen=True, eq=False)
class DecompositionReport:
    """Multiplicity table of one decomposition flavor.

    ``entries[(i, q)]`` is the number of copies of the q-th local cohomology
    block inside cohomological degree i; zero entries are omitted.
    """

    kind: str
    field: FieldSpec
    ambient_dim: int
    poset: Poset
    entries: dict

    def multiplicity(self, i: int, q: int) -> int:
        return self.entries.get((i, q), 0)

    def nonzero_indices(self) -> list[int]:
        return sorted({i for i, _ in self.entries})


def _table(poset: Poset, field: FieldSpec | None) -> IntervalBettiTable:
    return interval_betti_table(poset, field)


def mult_M(poset: Poset, field: FieldSpec | None = None,
           table: IntervalBettiTable | None = None) -> DecompositionReport:
    """Hochster-side multiplicities: M[i, q] = betti[i - d_q - 1] of (q, 1^)."""
    if table is None:
        table = _table(poset, field)
    entries: dict = {}
    for q in range(poset.n):
        d_q = poset.dims[q]
        for idx, b in table.vector(q).items():
            entries[(idx + d_q + 1, q)] = b
    return DecompositionReport(HOCHSTER, table.field,
                               poset.elements[0].ambient.d, poset, entries)


def mult_m(poset: Poset, field: FieldSpec | None = None,
           table: IntervalBettiTable | None = None) -> DecompositionReport:
    """Terai-side multiplicities: m[j, q] = betti[h_q - j - 1] of (q, 1^)."""
    if table is None:
        table = _table(poset, field)
    entries: dict = {}
    for q in range(poset.n):
        h_q = poset.heights[q]
        for idx, b in table.vector(q).items():
            entries[(h_q - idx - 1, q)] = b
    return DecompositionReport(TERAI, table.field,
                               poset.elements[0].ambient.d, poset, entries)


@dataclass(frozen=True)
class HilbertSeries:
    """Finite sum of c_e * (t - 1)^(-e) with integer coefficients, e >= 0."""

    coeffs: tuple[tuple[int, int], ...]  # sorted (exponent e, coefficient), zeros dropped

    @classmethod
    def from_map(cls, data: dict) -> "HilbertSeries":
        return cls(tuple(sorted((e, c) for e, c in data.items() if c)))

    @property
    def as_map(self) -> dict:
        return dict(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e, c in self.coeffs:
            if e == 0:
                parts.append(str(c))
            else:
                head = "" if c == 1 else f"{c}*"
                parts.append(f"{head}(t-1)^-{e}")
        return " + ".join(parts)


def hilbert_series(poset: Poset, field: FieldSpec | None = None, i: int = 0,
                   report: DecompositionReport | None = None) -> HilbertSeries:
    """Series of the i-th local cohomology at the graded maximal ideal.

    Each element q contributes its multiplicity at exponent d_q, the quotient
    dimension, since one top local cohomology block has series (t-1)^(-d_q).
    """
    if report is None:
        report = mult_M(poset, field)
    data: dict[int, int] = {}
    for (ii, q), mult in report.entries.items():
        if ii == i:
            e = poset.dims[q]
            data[e] = data.get(e, 0) + mult
    return HilbertSeries.from_map(data)


def laurent_expansion(series: HilbertSeries, depth: int) -> list[tuple[int, int]]:
    """Expansion in powers of 1/t: [(0, c), (-1, c), ..., (-depth, c)].

    Uses (t-1)^(-e) = sum_{k >= e} C(k-1, e-1) t^(-k); the e = 0 part is the
    constant term.
    """
    if depth < 1:
        raise InputError("depth must be at least 1")
    out = [(0, series.as_map.get(0, 0))]
    for k in range(1, depth + 1):
        c = sum(coeff * comb(k - 1, e - 1)
                for e, coeff in series.coeffs if 1 <= e <= k)
        out.append((-k, c))
    return out


def regularity(poset: Poset, field: FieldSpec | None = None,
               report: DecompositionReport | None = None) -> int:
    """max of i - d_q over the nonzero Hochster multiplicities."""
    if report is None:
        report = mult_M(poset, field)
    if not report.entries:
        raise RefusalError("all multiplicities vanish; regularity undefined")
    return max(i - poset.dims[q] for (i, q) in report.entries)


def _check_linear_primes(poset: Poset) -> None:
    for e in poset.elements:
        if isinstance(e, PurePowerIdeal) and not e.is_squarefree:
            raise RefusalError(
                "D-module length needs prime components; "
                f"{label(e)} is a non-squarefree pure-power ideal")


@dataclass(frozen=True)
class CycleList:
    entries: tuple[tuple[Ideal, int], ...]  # (ideal, multiplicity > 0)

    def to_json(self) -> list:
        return [{"element": label(i), "ideal": ideal_to_json(i), "multiplicity": m}
                for i, m in self.entries]


def dmodule_length(poset: Poset, field: FieldSpec | None = None, r: int = 0,
                   report: DecompositionReport | None = None) -> int:
    """Length of H_I^r as a D-module: sum of the Terai multiplicities at r.

    Each H^{h_p}_{I_p}(A) for a linear prime I_p is a simple D-module, so it
    contributes exactly one composition factor; non-prime monomial components
    are refused rather than silently extended.
    """
    _check_linear_primes(poset)
    if report is None:
        report = mult_m(poset, field)
    return sum(mult for (j, q), mult in report.entries.items() if j == r)


def characteristic_cycle(poset: Poset, field: FieldSpec | None = None, r: int = 0,
                         report: DecompositionReport | None = None) -> CycleList:
    """Conormal-cycle summands of H_I^r with their multiplicities."""
    _check_linear_primes(poset)
    if report is None:
        report = mult_m(poset, field)
    entries = [(poset.elements[q], mult)
               for (j, q), mult in sorted(report.entries.items())
               if j == r and mult > 0]
    return CycleList(tuple(entries))


@dataclass(frozen=True, eq=False)
class HypothesesReport:
    poset: Poset
    cohen_macaulay: tuple[bool, ...]  # per element; true by class membership
    containments: tuple[tuple[int, int], ...]  # (p, q) with I_q contained in I_p
    redundant_components: tuple[tuple[int, int], ...]  # input indices (inner, outer)
    limit: LimitReport

    def to_json(self) -> dict:
        labels = [label(e) for e in self.poset.elements]
        return {
            "cohen_macaulay": [
                {"element": labels[i], "cm": flag}
                for i, flag in enumerate(self.cohen_macaulay)
            ],
            "containments": [
                {"smaller": labels[q], "larger": labels[p]}
                for p, q in self.containments
            ],
            "redundant_components": [list(pair) for pair in self.redundant_components],
            "limit": self.limit.to_json(),
        }


def hypotheses_report(components: Sequence[Ideal], max_degree: int = 6) -> HypothesesReport:
    """Inventory of the degeneration hypotheses for a component list.

    Cohen-Macaulayness holds for both supported classes by construction, so
    it is recorded rather than computed.  Containments between distinct poset
    elements are unavoidable in a sum-closed poset and are listed verbatim;
    the limit section carries the degree-wise acyclicity and distributivity
    diagnostics.
    """
    report = limit_check(components, max_degree)
    poset = report.poset
    cm = tuple(True for _ in range(poset.n))
    containments = tuple(
        (p, q)
        for p in range(poset.n) for q in range(poset.n)
        if p != q and contains(poset.elements[p], poset.elements[q]))
    redundant = tuple(
        (i, jdx)
        for i, a in enumerate(components) for jdx, b in enumerate(components)
        if i != jdx and contains(b, a))
    return HypothesesReport(poset, cm, containments, redundant, report)


def decomposition_json(poset: Poset, field: FieldSpec | None = None,
                       kind: str = HOCHSTER, max_degree: int = 6) -> dict:
    """Full report payload: multiplicities, series, regularity, validity."""
    table = interval_betti_table(poset, field)
    report = mult_M(poset, table=table) if kind == HOCHSTER else mult_m(poset, table=table)
    hochster = report if kind == HOCHSTER else mult_M(poset, table=table)
    components = [poset.elements[i] for i in poset.component_ids]
    limit = limit_check(components, max_degree)
    labels = [label(e) for e in poset.elements]
    entries = [
        {"i": i, "element": labels[q], "element_index": q, "multiplicity": mult}
        for (i, q), mult in sorted(report.entries.items())
    ]
    hilbert = []
    for i in hochster.nonzero_indices():
        series = hilbert_series(poset, i=i, report=hochster)
        hilbert.append({"i": i, "series": {str(e): c for e, c in series.coeffs}})
    fld = {"kind": table.field.kind}
    if table.field.p is not None:
        fld["p"] = table.field.p
    return {
        "kind": kind,
        "field": fld,
        "entries": entries,
        "hilbert": hilbert,
        "regularity": regularity(poset, report=hochster),
        "validity_flags": {
            "limit_defect_zero_up_to_degree": limit.max_defect == 0,
            "distributive_up_to_degree": limit.distributive,
            "max_degree_checked": max_degree,
            "regularity_applies_to_quotient": limit.max_defect == 0,
        },
    }
