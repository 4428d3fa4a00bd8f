"""Copula extraction from a cdf and the exact verification suite.

Given a cdf F with margins F_1 .. F_d, the candidate copula is

    C(s) = F( F_1^{-1}(s_1 + 0), ..., F_d^{-1}(s_d + 0) )

where each coordinate is transformed by the right-limit quantile
``inf { x : F_i(x) > s }``.  At ``s_i = 1`` the set is empty, the quantile is
+inf, and the evaluation semantics of F turn the coordinate into "no
constraint", so C(1, ..., 1) = 1.

Three verifiers compare this construction against what a copula must satisfy:
the factorization F(x) = C(F_1(x_1), ..., F_d(x_d)) on a grid, uniformity of
the one-dimensional sections C(1,..,s,..,1) = s, and the copula axioms
(non-negative box volumes, groundedness on the faces s_i = 0, and the
dependence envelope max(sum s_i - (d-1), 0) <= C(s) <= min s_i).  All
comparisons are exact; failures become report entries with rational witnesses,
because for discontinuous margins the construction genuinely breaks and
exhibiting the exact break points is the purpose of this module.

Verification grids always merge the structural breakpoints of the inputs, so a
violation at a jump cannot hide between grid points.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iter_product
from typing import Optional, Sequence

from .errors import DomainError, ValidationError
from .monotone import MonotoneFn
from .mvdf import MultivariateDf, Point, random_unit_cuboids, vertex_sum
from .scalars import as_scalar


@dataclass(frozen=True)
class GridSpec:
    """Uniform grid resolution: each axis takes the points k/m scaled to its range."""

    m: int = 20

    def __post_init__(self) -> None:
        if not isinstance(self.m, int) or self.m < 1:
            raise ValidationError(f"grid resolution must be an integer >= 1, got {self.m!r}")

    def axis_points(self, lo: Fraction, hi: Fraction, extra: Sequence[Fraction] = ()) -> tuple[Fraction, ...]:
        """k/m points on [lo, hi] merged with the given structural breakpoints."""
        if lo > hi:
            raise ValidationError(f"grid range [{lo}, {hi}] is empty")
        points = {lo + Fraction(k, self.m) * (hi - lo) for k in range(self.m + 1)}
        points.update(extra)
        return tuple(sorted(points))


@dataclass(frozen=True)
class Copula:
    """Candidate copula of a cdf: right-limit quantile transform then evaluation.

    Margins are cached at extraction time; evaluation is lazy and no grid is
    ever materialized here.
    """

    source: MultivariateDf
    margins: tuple[MonotoneFn, ...]

    @property
    def dim(self) -> int:
        return len(self.margins)

    def eval(self, s: Sequence) -> Fraction:
        coords = tuple(as_scalar(c) for c in s)
        if len(coords) != self.dim:
            raise DomainError(f"point has {len(coords)} coordinates, expected {self.dim}")
        for c in coords:
            if not 0 <= c <= 1:
                raise DomainError(f"copula argument {c} outside [0, 1]")
        transformed = tuple(m.gen_inverse_right(c) for m, c in zip(self.margins, coords))
        return self.source.eval(transformed)


def extract_copula(df: MultivariateDf) -> Copula:
    """Build the candidate copula of ``df``; rejects sources that are not cdfs."""
    margins = []
    for i in range(df.dim):
        m = df.margin_fn(i)
        if not m.is_cdf():
            raise ValidationError(
                f"margin {i + 1} has range [{m.inf_value}, {m.sup_value}]; "
                "copula extraction needs a cdf"
            )
        margins.append(m)
    return Copula(source=df, margins=tuple(margins))


def copula_eval(copula: Copula, s: Sequence) -> Fraction:
    """Exact value of the extracted copula at a point of [0,1]^d."""
    return copula.eval(s)


# -- reports -------------------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    """One exact mismatch; ``point`` is the grid point (or the (a, b) corner pair)."""

    point: tuple
    expected: Fraction
    got: Fraction
    kind: str

    @property
    def deviation(self) -> Fraction:
        return abs(self.got - self.expected)


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one verification sweep; passes iff no violations were found."""

    check_name: str
    points_tested: int
    violations: tuple[Violation, ...]

    @property
    def passed(self) -> bool:
        return not self.violations

    @property
    def max_deviation(self) -> Fraction:
        return max((v.deviation for v in self.violations), default=Fraction(0))

    def to_json_dict(self, max_witnesses: int = 20) -> dict:
        from .serialize import check_report_json_dict

        return check_report_json_dict(self, max_witnesses)


def _merged_axes(
    df: MultivariateDf, grid: GridSpec, box: Optional[tuple[Point, Point]]
) -> list[tuple[Fraction, ...]]:
    lo, hi = box if box is not None else df.support_box()
    if len(lo) != df.dim or len(hi) != df.dim:
        raise DomainError("bounding box dimension does not match the df")
    return [
        grid.axis_points(as_scalar(lo[i]), as_scalar(hi[i]), df.axis_breakpoints(i))
        for i in range(df.dim)
    ]


def verify_sklar_identity(
    df: MultivariateDf,
    grid: GridSpec = GridSpec(),
    box: Optional[tuple[Point, Point]] = None,
) -> CheckReport:
    """Compare F(x) against C(F_1(x_1), ..., F_d(x_d)) on a merged grid.

    The grid spans ``box`` (default: the support box of F) merged with every
    structural breakpoint.  Quantile transforms are precomputed per axis; each
    grid point then costs two evaluations of F.
    """
    copula = extract_copula(df)
    axes = _merged_axes(df, grid, box)
    transformed = [
        [m.gen_inverse_right(m.eval(x)) for x in axis_pts]
        for m, axis_pts in zip(copula.margins, axes)
    ]

    violations = []
    points = 0
    for idx in iter_product(*(range(len(a)) for a in axes)):
        x = tuple(axes[i][j] for i, j in enumerate(idx))
        expected = df.eval(x)
        got = df.eval(tuple(transformed[i][j] for i, j in enumerate(idx)))
        points += 1
        if got != expected:
            violations.append(Violation(point=x, expected=expected, got=got, kind="identity"))
    return CheckReport(
        check_name="sklar_identity", points_tested=points, violations=tuple(violations)
    )


def verify_uniform_margins(copula: Copula, grid: GridSpec = GridSpec()) -> CheckReport:
    """Check every one-dimensional section C(1, .., s, .., 1) == s exactly.

    The s-grid merges the critical levels of each margin, which is where a
    jump in the margin forces the section away from the diagonal.
    """
    violations = []
    points = 0
    for i, m in enumerate(copula.margins):
        levels = [lv for lv in m.critical_levels() if 0 <= lv <= 1]
        for s in grid.axis_points(Fraction(0), Fraction(1), levels):
            point = tuple(s if j == i else Fraction(1) for j in range(copula.dim))
            got = copula.eval(point)
            points += 1
            if got != s:
                violations.append(
                    Violation(point=point, expected=s, got=got, kind=f"margin_{i + 1}")
                )
    return CheckReport(
        check_name="uniform_margins", points_tested=points, violations=tuple(violations)
    )


def verify_copula_axioms(
    copula: Copula,
    n_cuboids: int = 200,
    seed: int = 0,
    grid: GridSpec = GridSpec(),
) -> CheckReport:
    """Check d-increase on random boxes, groundedness, and the dependence envelope.

    Random boxes live in [0,1]^d and come from the seeded deterministic
    generator; grid points merge the margin critical levels.  Grounded means
    C(s) = 0 whenever some coordinate is 0; the envelope is
    max(sum s_i - (d-1), 0) <= C(s) <= min s_i.
    """
    if n_cuboids < 1:
        raise ValidationError(f"n_cuboids must be >= 1, got {n_cuboids}")
    d = copula.dim
    violations = []
    points = 0

    for box in random_unit_cuboids(seed, d, n_cuboids):
        vol = vertex_sum(copula.eval, box)
        points += 1
        if vol < 0:
            violations.append(
                Violation(point=(box.a, box.b), expected=Fraction(0), got=vol, kind="d_increasing")
            )

    axis_levels = []
    for m in copula.margins:
        levels = [lv for lv in m.critical_levels() if 0 <= lv <= 1]
        axis_levels.append(grid.axis_points(Fraction(0), Fraction(1), levels))

    # per-axis quantile transform, so the full sweep costs one F-eval per point
    transformed = [
        {s: m.gen_inverse_right(s) for s in pts}
        for m, pts in zip(copula.margins, axis_levels)
    ]

    for combo in iter_product(*axis_levels):
        value = copula.source.eval(
            tuple(transformed[i][s] for i, s in enumerate(combo))
        )
        points += 1
        if any(s == 0 for s in combo) and value != 0:
            violations.append(
                Violation(point=combo, expected=Fraction(0), got=value, kind="grounded")
            )
        lower = max(sum(combo) - (d - 1), Fraction(0))
        upper = min(combo)
        if value < lower:
            violations.append(
                Violation(point=combo, expected=lower, got=value, kind="fh_lower")
            )
        if value > upper:
            violations.append(
                Violation(point=combo, expected=upper, got=value, kind="fh_upper")
            )
    return CheckReport(
        check_name="copula_axioms", points_tested=points, violations=tuple(violations)
    )
