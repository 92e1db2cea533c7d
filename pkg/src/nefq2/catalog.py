"""Verified catalog of the nef-bundle classification families.

Four tables are shipped:

``main22``
    Rank-r nef bundles with determinant (2, 2): thirteen numbered
    families, the sub-splittings of family 6, and the swapped twins of
    every display that is asymmetric under exchanging the two rulings.
``quadric21``
    Determinant (2, 1): five families.
``halfmax``
    Determinant (c1a, c1b) with maximal c2 on one factor, parametrized by
    (c1a, c1b) and the splitting degree b of the second factor.
``nearmax``
    c2 one or two below the maximum, parametrized by (c1a, c1b): three
    families.

Each CaseSpec records a four-term display 0 -> sub -> mid -> E -> coker
-> 0 whose sub and mid are direct sums of line bundles with
multiplicities affine in the rank r, together with provenance-free flags
(nef is asserted by the table, weak_fano and the numerics are always
recomputed; nothing about a bundle is ever looked up).

JSON schema (stable, lexicographic key order):

    {"id": "main22-6-1-2", "theorem": "main22",
     "sub": [{"deg": [0, 0], "mult": 1}],
     "mid": [{"deg": [2, 0], "mult": 1}, {"deg": [0, 0], "mult": "r-3"}],
     "coker": null | {"kind": "point"} | {"kind": "structure"}
            | {"kind": "curve", "support": [2, 2], "twist_degree": 0},
     "min_rank": 3, "flags": {...}, "twin_of": null | "main22-6-1"}

Multiplicities follow the grammar  int | "r" | "r+int" | "r-int".
The flags object has keys nef ("asserted"), globally_generated
(true/false/null), weak_fano (derived: c2 < c1^2) and
bondal_reconstructible (whether the family satisfies the vanishing
hypotheses of the module-profile reconstruction).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace
from typing import Any, Iterable, Mapping, NamedTuple

from .bondal import reconstruct
from .cohomology import BundleNumerics, euler_char, is_weak_fano
from .errors import HypothesisError, ReconstructionError
from .ktheory import (
    KClass,
    TorsionDescriptor,
    TorsionKind,
    four_term_quotient,
    line_class,
    to_chern,
    torsion_class,
)
from .picard import BiDegree, intersect

THEOREMS = ("main22", "quadric21", "halfmax", "nearmax")


@dataclass(frozen=True)
class RankExpr:
    """An integer multiplicity affine in the rank r: const + coef*r.

    Serialization only supports coef in {0, 1} (the grammar
    int | "r" | "r+int" | "r-int"), which covers every shipped display.

    >>> RankExpr.parse("r-2").evaluate(5)
    3
    >>> str(RankExpr(3, 1))
    'r+3'
    """

    const: int
    coef: int = 0

    def evaluate(self, r: int) -> int:
        return self.const + self.coef * r

    def __add__(self, other: RankExpr) -> RankExpr:
        return RankExpr(self.const + other.const, self.coef + other.coef)

    def __sub__(self, other: RankExpr) -> RankExpr:
        return RankExpr(self.const - other.const, self.coef - other.coef)

    def __mul__(self, n: int) -> RankExpr:
        if not isinstance(n, int):
            return NotImplemented
        return RankExpr(n * self.const, n * self.coef)

    __rmul__ = __mul__

    @staticmethod
    def parse(text: str | int) -> RankExpr:
        if isinstance(text, int):
            return RankExpr(text)
        m = re.fullmatch(r"r([+-]\d+)?", text.strip())
        if not m:
            raise ValueError(f"bad multiplicity {text!r}; expected int, 'r', 'r+k' or 'r-k'")
        return RankExpr(int(m.group(1) or 0), 1)

    def render(self) -> int | str:
        if self.coef == 0:
            return self.const
        if self.coef != 1:
            raise ValueError(f"multiplicity {self.const}+{self.coef}r not in the grammar")
        if self.const == 0:
            return "r"
        return f"r+{self.const}" if self.const > 0 else f"r-{-self.const}"

    def __str__(self) -> str:
        return str(self.render())


Term = tuple[BiDegree, RankExpr]


def _terms(*raw: tuple[tuple[int, int], int | str]) -> tuple[Term, ...]:
    return tuple((BiDegree(*deg), RankExpr.parse(mult)) for deg, mult in raw)


@dataclass(frozen=True)
class CaseSpec:
    """One classification family, as a four-term display."""

    id: str
    theorem: str
    c1: BiDegree
    sub_terms: tuple[Term, ...]
    mid_terms: tuple[Term, ...]
    coker: TorsionDescriptor | None
    min_rank: int
    expected_c2: int
    globally_generated: bool | None
    bondal_reconstructible: bool
    twin_of: str | None = None
    annotation: str = ""

    @property
    def case_number(self) -> str:
        """The family label within its table, e.g. '6-1-2-swap'."""
        return self.id.removeprefix(self.theorem + "-")

    def flags(self, *, weak_fano: bool | None = None) -> dict[str, Any]:
        wf = weak_fano if weak_fano is not None else self.expected_c2 < intersect(self.c1, self.c1)
        return {
            "nef": "asserted",
            "globally_generated": self.globally_generated,
            "weak_fano": wf,
            "bondal_reconstructible": self.bondal_reconstructible,
        }


def _coker_json(coker: TorsionDescriptor | None) -> dict[str, Any] | None:
    if coker is None:
        return None
    if coker.kind is TorsionKind.CURVE_TORSION:
        assert coker.support is not None
        return {
            "kind": coker.kind.value,
            "support": [coker.support.a, coker.support.b],
            "twist_degree": coker.twist_degree,
        }
    return {"kind": coker.kind.value}


def case_to_json(case: CaseSpec) -> dict[str, Any]:
    """Serialize one case to the documented schema."""
    return {
        "id": case.id,
        "theorem": case.theorem,
        "sub": [{"deg": [d.a, d.b], "mult": m.render()} for d, m in case.sub_terms],
        "mid": [{"deg": [d.a, d.b], "mult": m.render()} for d, m in case.mid_terms],
        "coker": _coker_json(case.coker),
        "min_rank": case.min_rank,
        "flags": case.flags(),
        "twin_of": case.twin_of,
    }


def _min_rank(sub: tuple[Term, ...], mid: tuple[Term, ...]) -> int:
    """Smallest r making every multiplicity non-negative (and r >= 1)."""
    bound = 1
    for _, m in list(sub) + list(mid):
        if m.coef == 1 and m.const < 0:
            bound = max(bound, -m.const)
    return bound


def _case(
    theorem: str,
    number: str,
    c1: tuple[int, int],
    sub: tuple[Term, ...],
    mid: tuple[Term, ...],
    expected_c2: int,
    *,
    coker: TorsionDescriptor | None = None,
    gg: bool | None = True,
    bondal: bool = False,
    twin_of: str | None = None,
    annotation: str = "",
) -> CaseSpec:
    return CaseSpec(
        id=f"{theorem}-{number}",
        theorem=theorem,
        c1=BiDegree(*c1),
        sub_terms=sub,
        mid_terms=mid,
        coker=coker,
        min_rank=_min_rank(sub, mid),
        expected_c2=expected_c2,
        globally_generated=gg,
        bondal_reconstructible=bondal,
        twin_of=twin_of,
        annotation=annotation,
    )


def _swapped(case: CaseSpec) -> CaseSpec:
    """The (a,b) -> (b,a) twin of a display, linked back to it."""

    def swap(terms: tuple[Term, ...]) -> tuple[Term, ...]:
        return tuple((d.swap(), m) for d, m in terms)

    return CaseSpec(
        id=f"{case.id}-swap",
        theorem=case.theorem,
        c1=case.c1.swap(),
        sub_terms=swap(case.sub_terms),
        mid_terms=swap(case.mid_terms),
        coker=case.coker,
        min_rank=case.min_rank,
        expected_c2=case.expected_c2,
        globally_generated=case.globally_generated,
        bondal_reconstructible=case.bondal_reconstructible,
        twin_of=case.id,
        annotation="ruling swap of " + case.id,
    )


def _main22_cases() -> tuple[CaseSpec, ...]:
    t = "main22"
    c1 = (2, 2)
    cases: list[CaseSpec] = []

    def add(case: CaseSpec, twin: bool = False, twin_note: str = "") -> None:
        cases.append(case)
        if twin:
            tw = _swapped(case)
            if twin_note:
                tw = replace(tw, annotation=twin_note)
            cases.append(tw)

    add(_case(t, "1", c1, _terms(), _terms(((2, 2), 1), ((0, 0), "r-1")), 0))
    add(
        _case(t, "2", c1, _terms(), _terms(((2, 1), 1), ((0, 1), 1), ((0, 0), "r-2")), 2),
        twin=True,
        twin_note="the table displays both orientations of this split family",
    )
    add(_case(t, "3", c1, _terms(), _terms(((1, 1), 2), ((0, 0), "r-2")), 2))
    add(
        _case(
            t,
            "4",
            c1,
            _terms(((0, 0), 1)),
            _terms(((1, 1), 1), ((1, 0), 1), ((0, 1), 1), ((0, 0), "r-2")),
            3,
            annotation=(
                "when the composite into the (1,1) summand vanishes the middle "
                "splits off O(1,1) and the display degenerates"
            ),
        )
    )
    add(_case(t, "5", c1, _terms(((-1, -1), 1)), _terms(((1, 1), 1), ((0, 0), "r")), 4))
    add(_case(t, "6", c1, _terms(((0, 0), 2)), _terms(((1, 0), 2), ((0, 1), 2), ((0, 0), "r-2")), 4))
    add(
        _case(t, "6-1", c1, _terms(((0, 0), 1)), _terms(((2, 0), 1), ((0, 1), 2), ((0, 0), "r-2")), 4),
        twin=True,
    )
    add(_case(t, "6-1-1", c1, _terms(), _terms(((2, 0), 1), ((0, 2), 1), ((0, 0), "r-2")), 4))
    add(
        _case(t, "6-1-2", c1, _terms(), _terms(((2, 0), 1), ((0, 1), 2), ((0, 0), "r-3")), 4),
        twin=True,
    )
    add(_case(t, "6-2", c1, _terms(), _terms(((1, 0), 2), ((0, 1), 2), ((0, 0), "r-4")), 4))
    add(
        _case(t, "6-3", c1, _terms(((0, -1), 1)), _terms(((1, 0), 2), ((0, 1), 1), ((0, 0), "r-2")), 4),
        twin=True,
        twin_note="twin inferred from the table's ruling-symmetry remark",
    )
    add(
        _case(
            t,
            "7",
            c1,
            _terms(((-1, -1), 1), ((-1, 0), 1), ((0, -1), 1)),
            _terms(((0, 0), "r+3")),
            5,
        )
    )
    add(
        _case(t, "8", c1, _terms(((-1, -2), 1)), _terms(((1, 0), 1), ((0, 0), "r")), 6),
        twin=True,
        twin_note="twin inferred from the table's ruling-symmetry remark",
    )
    add(
        _case(
            t,
            "9",
            c1,
            _terms(((-1, -1), 2)),
            _terms(((0, 0), "r+2")),
            6,
            bondal=True,
        )
    )
    add(
        _case(
            t,
            "10",
            c1,
            _terms(((-2, -2), 1)),
            _terms(((0, 0), "r+1")),
            8,
            annotation="members force a one-dimensional h1, so no module-profile route",
        )
    )
    add(
        _case(
            t,
            "11",
            c1,
            _terms(((-2, -2), 1)),
            _terms(((0, 0), "r+1")),
            7,
            coker=TorsionDescriptor(TorsionKind.POINT_SHEAF),
            gg=False,
            bondal=True,
        )
    )
    add(
        _case(
            t,
            "12",
            c1,
            _terms(((-2, -2), 1)),
            _terms(((0, 0), "r")),
            8,
            coker=TorsionDescriptor(TorsionKind.STRUCTURE_SHEAF),
            gg=False,
            bondal=True,
        )
    )
    add(
        _case(
            t,
            "13",
            c1,
            _terms(((-1, -1), 4)),
            _terms(((0, 0), "r"), ((-1, 0), 2), ((0, -1), 2)),
            8,
            gg=False,
            bondal=True,
        )
    )
    return tuple(cases)


def _quadric21_cases() -> tuple[CaseSpec, ...]:
    t = "quadric21"
    c1 = (2, 1)
    return (
        _case(t, "1", c1, _terms(), _terms(((2, 1), 1), ((0, 0), "r-1")), 0),
        _case(t, "2", c1, _terms(), _terms(((1, 1), 1), ((1, 0), 1), ((0, 0), "r-2")), 1),
        _case(t, "3", c1, _terms(((0, 0), 1)), _terms(((1, 0), 2), ((0, 1), 1), ((0, 0), "r-2")), 2),
        _case(t, "4", c1, _terms(((-1, -1), 1), ((-1, 0), 1)), _terms(((0, 0), "r+2")), 3),
        _case(t, "5", c1, _terms(((-2, -1), 1)), _terms(((0, 0), "r+1")), 4),
    )


def _require_c1(theorem: str, c1: BiDegree | None) -> BiDegree:
    if c1 is None:
        raise HypothesisError(f"{theorem} is parametric: a determinant --c1 a,b is required")
    return c1


def _halfmax_cases(c1: BiDegree, b: int) -> tuple[CaseSpec, ...]:
    if c1.a < 0 or c1.b < 0:
        raise HypothesisError(f"determinant {c1} of a nef bundle must be effective")
    if not 0 <= b <= c1.b:
        raise HypothesisError(f"splitting degree b={b} must lie in 0..{c1.b}")
    if b == c1.b:
        return (
            _case(
                "halfmax",
                "split",
                (c1.a, c1.b),
                _terms(),
                _terms(((c1.a, c1.b), 1), ((0, 0), "r-1")),
                0,
                annotation="degenerate endpoint b = c1b of the parametric family",
            ),
        )
    return (
        _case(
            "halfmax",
            "general",
            (c1.a, c1.b),
            _terms(((0, 0), c1.b - b - 1)),
            _terms(((c1.a, b), 1), ((0, 1), c1.b - b), ((0, 0), "r-2")),
            c1.a * (c1.b - b),
        ),
    )


def _nearmax_cases(c1: BiDegree) -> tuple[CaseSpec, ...]:
    if c1.a < 1 or c1.b < 1:
        raise HypothesisError(f"the near-maximal table needs both determinant degrees >= 1, got {c1}")
    t = "nearmax"
    down = (c1.a - 1, c1.b - 1)
    return (
        _case(t, "1", (c1.a, c1.b), _terms(), _terms((down, 1), ((1, 1), 1), ((0, 0), "r-2")), c1.a + c1.b - 2),
        _case(
            t,
            "2",
            (c1.a, c1.b),
            _terms(((0, 0), 1)),
            _terms((down, 1), ((1, 0), 1), ((0, 1), 1), ((0, 0), "r-2")),
            c1.a + c1.b - 1,
        ),
        _case(t, "3", (c1.a, c1.b), _terms(((-1, -1), 1)), _terms((down, 1), ((0, 0), "r")), c1.a + c1.b),
    )


def list_cases(
    theorem: str,
    *,
    c1: BiDegree | None = None,
    b: int | None = None,
) -> tuple[CaseSpec, ...]:
    """All cases of one table, in the table's own order (twins follow the
    display they swap).  halfmax needs c1 and b; nearmax needs c1."""
    if theorem == "main22":
        return _main22_cases()
    if theorem == "quadric21":
        return _quadric21_cases()
    if theorem == "halfmax":
        det = _require_c1(theorem, c1)
        if b is None:
            raise HypothesisError("halfmax is parametric: a splitting degree --b-param is required")
        return _halfmax_cases(det, b)
    if theorem == "nearmax":
        return _nearmax_cases(_require_c1(theorem, c1))
    raise ValueError(f"unknown theorem {theorem!r}; choose from {THEOREMS}")


def case_kclass(case: CaseSpec, r: int) -> KClass:
    """Alternating K-sum of the display at rank r (no honesty checks)."""
    def side(terms: tuple[Term, ...]) -> KClass:
        total = KClass.zero()
        for deg, mult in terms:
            total = total + mult.evaluate(r) * line_class(deg)
        return total

    coker = torsion_class(case.coker) if case.coker is not None else KClass.zero()
    return four_term_quotient(side(case.sub_terms), side(case.mid_terms), coker)


def case_numerics(case: CaseSpec, r: int) -> BundleNumerics:
    """Chern data of the family member of rank r, computed from the display.

    >>> main22 = list_cases("main22")
    >>> case_numerics(main22[0], 3)
    BundleNumerics(rank=3, c1=BiDegree(a=2, b=2), c2=0)
    """
    if r < case.min_rank:
        raise ValueError(f"{case.id} needs rank >= {case.min_rank}, got {r}")
    return to_chern(case_kclass(case, r))


class CheckResult(NamedTuple):
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of every numeric check of one case at one rank."""

    case_id: str
    rank_tested: int
    computed: BundleNumerics
    expected_c2: int
    flags: Mapping[str, Any]
    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict[str, Any]:
        return {
            "case_id": self.case_id,
            "rank_tested": self.rank_tested,
            "computed": {
                "rank": self.computed.rank,
                "c1": [self.computed.c1.a, self.computed.c1.b],
                "c2": self.computed.c2,
            },
            "expected_c2": self.expected_c2,
            "flags": dict(self.flags),
            "checks": [{"name": n, "passed": p, "detail": d} for n, p, d in self.checks],
            "passed": self.passed,
        }


def verify_case(case: CaseSpec, r: int) -> VerificationReport:
    """Recompute every numeric claim of one case at one rank."""
    e = case_numerics(case, r)
    c1sq = intersect(e.c1, e.c1)
    checks = [
        CheckResult("rank", e.rank == r, f"display rank {e.rank}, requested {r}"),
        CheckResult("c1", e.c1 == case.c1, f"display c1 {e.c1}, table c1 {case.c1}"),
        CheckResult(
            "c2",
            e.c2 == case.expected_c2,
            f"computed c2 {e.c2}, expected {case.expected_c2}",
        ),
        CheckResult("c2_bound", 0 <= e.c2 <= c1sq, f"c2 {e.c2} against nef bound 0..{c1sq}"),
        CheckResult(
            "chi_nonnegative",
            euler_char(e) >= 0,
            f"chi = {euler_char(e)} must be >= 0 for a nef family",
        ),
        CheckResult(
            "multiplicities",
            all(m.evaluate(r) >= 0 for _, m in case.sub_terms + case.mid_terms),
            "every display multiplicity evaluates >= 0",
        ),
    ]
    if case.bondal_reconstructible and e.c2 >= 6 and e.c1 == BiDegree(2, 2):
        try:
            reconstruct(e)
            checks.append(CheckResult("reconstruction", True, "module profile rebuilds the K-class"))
        except ReconstructionError as exc:  # pragma: no cover - implementation bug guard
            checks.append(CheckResult("reconstruction", False, str(exc)))
    return VerificationReport(
        case_id=case.id,
        rank_tested=r,
        computed=e,
        expected_c2=case.expected_c2,
        flags=case.flags(weak_fano=is_weak_fano(e)),
        checks=tuple(checks),
    )


def verify_all(
    theorem: str,
    rank_min: int | None = None,
    rank_max: int = 10,
    *,
    c1: BiDegree | None = None,
    b: int | None = None,
    cases: Iterable[CaseSpec] | None = None,
) -> list[VerificationReport]:
    """verify_case over cases x ranks.  Each case is swept from
    max(rank_min, its min_rank) to rank_max; an empty range contributes
    nothing."""
    chosen = tuple(cases) if cases is not None else list_cases(theorem, c1=c1, b=b)
    reports: list[VerificationReport] = []
    for case in chosen:
        lo = case.min_rank if rank_min is None else max(rank_min, case.min_rank)
        for r in range(lo, rank_max + 1):
            reports.append(verify_case(case, r))
    return reports
