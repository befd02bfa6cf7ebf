"""Exhaustive enumeration campaigns over candidate polynomial families.

Families are finite and enumerated in a fixed deterministic order (coefficient
vectors lexicographically by encoding, monomials by ascending degree), so a
report's hit list is reproducible and identical whether the range is scanned
serially or split across worker processes.
"""

from __future__ import annotations

import time
from concurrent import futures
from dataclasses import dataclass, field as dataclass_field

from . import classify, polyfun
from .errors import BudgetExceeded, CharacteristicTooSmall
from .field import FieldSpec, make_field
from .polyfun import Poly

FAMILY_KINDS = ("monomials", "all-reduced", "shifted-cubics", "do-monomials")
MODES = ("planar", "alltop")

DEFAULT_CANDIDATE_BUDGET = 10_000_000
TABLE_OPS_PER_CANDIDATE = 1000  # ops ceiling = candidate budget * this


@dataclass(frozen=True)
class FamilySpec:
    """A finite candidate family with a precomputable cardinality."""

    kind: str
    max_degree: int | None = None

    def __post_init__(self):
        if self.kind not in FAMILY_KINDS:
            raise ValueError(f"unknown family kind {self.kind!r}")
        if self.kind == "all-reduced":
            if self.max_degree is None or self.max_degree < 0:
                raise ValueError("all-reduced needs a non-negative max_degree")
        elif self.max_degree is not None:
            raise ValueError(f"max_degree only applies to all-reduced, not {self.kind}")

    def size(self, field: FieldSpec) -> int:
        if self.kind == "monomials":
            return field.q - 2  # degrees 2 .. q-1
        if self.kind == "all-reduced":
            return field.q ** (self.max_degree + 1)
        if self.kind == "shifted-cubics":
            return field.q
        return field.r  # do-monomials: one per k in [0, r)

    def candidate(self, field: FieldSpec, idx: int) -> Poly:
        """The idx-th candidate in enumeration order."""
        if not 0 <= idx < self.size(field):
            raise IndexError(f"candidate index {idx} out of range")
        if self.kind == "monomials":
            return Poly.monomial(field, 2 + idx)
        if self.kind == "all-reduced":
            # coefficient vector (c_0, ..., c_D) ascending lexicographically,
            # so c_0 is the most significant digit of idx in base q
            D = self.max_degree
            coeffs = []
            for j in range(D, -1, -1):
                coeffs.append((idx // field.q**j) % field.q)
            return Poly(field, {e: c for e, c in enumerate(coeffs)})
        if self.kind == "shifted-cubics":
            return polyfun.shift_scale(Poly.monomial(field, 3), 1, idx)
        return Poly.monomial(field, field.p**idx + 1)

    def to_json_dict(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.kind == "all-reduced":
            out["max_degree"] = self.max_degree
        return out


@dataclass
class SearchReport:
    """Outcome of one enumeration campaign; hits in enumeration order."""

    field: FieldSpec
    family: FamilySpec
    mode: str
    tested: int
    hit_indices: list[int]
    hit_texts: list[str]
    hit_polys: list[Poly]
    elapsed_ms: int
    deterministic: bool = True

    def to_json_dict(self, canonical: bool = False) -> dict:
        out = {
            "field": self.field.to_json_dict(),
            "family": self.family.to_json_dict(),
            "mode": self.mode,
            "tested": self.tested,
            "hits": list(self.hit_texts),
        }
        if not canonical:
            out["elapsed_ms"] = self.elapsed_ms
        return out


def _scan(field, family, mode, start, stop):
    predicate = classify.is_planar if mode == "planar" else classify.is_alltop
    hits = []
    for idx in range(start, stop):
        f = family.candidate(field, idx)
        if predicate(f):
            hits.append((idx, str(f)))
    return hits


def _search_range(p, r, max_order, kind, max_degree, mode, start, stop):
    """Classify candidates in [start, stop); module-level for worker processes."""
    fld = make_field(p, r, max_order=max_order)
    return _scan(fld, FamilySpec(kind, max_degree), mode, start, stop)


def run_search(
    field: FieldSpec,
    family: FamilySpec,
    mode: str,
    *,
    budget: int | None = None,
    workers: int = 1,
) -> SearchReport:
    """Classify every candidate in the family; hits are the mode positives.

    Raises BudgetExceeded when the family cardinality exceeds the candidate
    budget, or when the worst-case table-operation estimate (q^2 per planar
    candidate, q^3 per alltop candidate) exceeds 1000x that budget — with the
    defaults, 10^7 candidates and 10^10 table operations.
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    n = family.size(field)
    cand_budget = DEFAULT_CANDIDATE_BUDGET if budget is None else budget
    if n > cand_budget:
        raise BudgetExceeded(f"{n} candidates exceed the budget {cand_budget}")
    per_candidate = field.q ** (2 if mode == "planar" else 3)
    ops_budget = cand_budget * TABLE_OPS_PER_CANDIDATE
    if n * per_candidate > ops_budget:
        raise BudgetExceeded(
            f"estimated {n * per_candidate} table operations exceed {ops_budget}"
        )

    t0 = time.perf_counter()
    if workers <= 1 or n < 4 * workers:
        pairs = _scan(field, family, mode, 0, n)
    else:
        args = (field.p, field.r, field.q, family.kind, family.max_degree, mode)
        bounds = [n * w // workers for w in range(workers + 1)]
        pairs = []
        with futures.ProcessPoolExecutor(max_workers=workers) as ex:
            jobs = [
                ex.submit(_search_range, *args, bounds[w], bounds[w + 1])
                for w in range(workers)
                if bounds[w] < bounds[w + 1]
            ]
            for job in jobs:  # submission order == range order
                pairs.extend(job.result())
    elapsed_ms = int(round((time.perf_counter() - t0) * 1000))

    indices = [i for i, _ in pairs]
    texts = [t for _, t in pairs]
    polys = [family.candidate(field, i) for i in indices]
    return SearchReport(
        field=field,
        family=family,
        mode=mode,
        tested=n,
        hit_indices=indices,
        hit_texts=texts,
        hit_polys=polys,
        elapsed_ms=elapsed_ms,
    )


def verify_char3_no_alltop(
    field: FieldSpec, family: FamilySpec, *, workers: int = 1
) -> tuple[bool, SearchReport]:
    """True when an Alltop search over a characteristic-3 field finds nothing.

    Over GF(3) with the all-reduced family of degree <= 2 this is a complete
    statement: the 27 reduced polynomials exhaust all functions on the field.
    """
    if field.p != 3:
        raise ValueError("this check is about characteristic-3 fields")
    report = run_search(field, family, "alltop", workers=workers)
    return (not report.hit_indices, report)


@dataclass
class DeltaDegreeReport:
    field: FieldSpec
    pairs_checked: int
    mismatches: list[tuple[int, int, int | None, int]] = dataclass_field(
        default_factory=list
    )  # (n, a, got, expected)

    def to_json_dict(self) -> dict:
        return {
            "field": self.field.to_json_dict(),
            "pairs_checked": self.pairs_checked,
            "mismatches": [
                {"n": n, "a": a, "got": got, "expected": want}
                for n, a, got, want in self.mismatches
            ],
        }


def verify_monomial_delta_degrees(field: FieldSpec) -> tuple[bool, DeltaDegreeReport]:
    """Check deg delta(x^n, a) against the predicted p^s*(m-1) for every
    n in [1, q-1] and every nonzero a."""
    report = DeltaDegreeReport(field=field, pairs_checked=0)
    for n in range(1, field.q):
        expected = polyfun.predicted_delta_degree(n, field.p)
        mono = Poly.monomial(field, n)
        for a in range(1, field.q):
            got = polyfun.delta(mono, a).degree()
            report.pairs_checked += 1
            if got != expected:
                report.mismatches.append((n, a, got, expected))
    return (not report.mismatches, report)


@dataclass
class CubicScopeReport:
    """Alltop hits of a family checked for cubic structure.

    A hit violates when some reduced difference fails the quadratic-monomial
    + additive + constant decomposition, or when the hit minus its additive
    and constant parts does not have degree exactly 3.  Violations are
    reported, never suppressed.
    """

    search: SearchReport
    hits_checked: int
    violations: list[tuple[str, list[str]]] = dataclass_field(default_factory=list)

    def to_json_dict(self, canonical: bool = False) -> dict:
        return {
            "search": self.search.to_json_dict(canonical),
            "hits_checked": self.hits_checked,
            "violations": [
                {"poly": text, "issues": issues} for text, issues in self.violations
            ],
        }


def _stripped_degree(f: Poly) -> int | None:
    """Degree of reduce(f) after removing the constant and power-of-p terms."""
    g = f.reduce()
    fld = f.field
    p_powers = set()
    e = 1
    while e < fld.q:
        p_powers.add(e)
        e *= fld.p
    core = {e: c for e, c in g.terms.items() if e != 0 and e not in p_powers}
    return max(core) if core else None


def verify_alltop_hits_cubic(
    field: FieldSpec, family: FamilySpec, *, workers: int = 1
) -> tuple[bool, CubicScopeReport]:
    """Search the family for Alltop hits and check each for cubic structure."""
    if field.p < 5:
        raise CharacteristicTooSmall("scope check applies to characteristic >= 5")
    report = run_search(field, family, "alltop", workers=workers)
    scope = CubicScopeReport(search=report, hits_checked=len(report.hit_polys))
    for text, f in zip(report.hit_texts, report.hit_polys):
        issues = []
        if not classify.alltop_deltas_decompose(f):
            issues.append("difference-decomposition")
        if _stripped_degree(f) != 3:
            issues.append("cubic-core-degree")
        if issues:
            scope.violations.append((text, issues))
    return (not scope.violations, scope)
