"""Multivariate distribution functions on the extended reals.

The volume of a half-open box ]a, b] under F is the signed sum over the 2^d
vertices of the box: each vertex takes coordinate ``a_i`` or ``b_i`` and the
sign is ``(-1)`` to the number of ``a`` coordinates chosen.  A function is a
distribution function when it is right-continuous and every such volume is
non-negative; it is a cdf when additionally any coordinate at -inf forces the
value 0 and all coordinates at +inf give 1.

:func:`check_df_axioms` probes all of this exactly on seeded random boxes and
on the structural breakpoints of the family, and returns a report; failures
are report entries carrying exact witnesses, never exceptions.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iter_product
from typing import Callable, ClassVar, Iterable

from .errors import DomainError, ValidationError
from .monotone import MonotoneFn
from .rng import SplitMix64
from .scalars import NEG_INF, POS_INF, ExtScalar, as_ext

Point = tuple[ExtScalar, ...]


def as_point(coords: Iterable) -> Point:
    point = tuple(as_ext(c) for c in coords)
    if not point:
        raise ValidationError("a point needs at least one coordinate")
    return point


@dataclass(frozen=True)
class Cuboid:
    """Half-open box ]a, b]; requires a <= b componentwise."""

    a: Point
    b: Point

    def __post_init__(self) -> None:
        a, b = as_point(self.a), as_point(self.b)
        if len(a) != len(b):
            raise ValidationError(f"corner dimensions differ: {len(a)} vs {len(b)}")
        for i, (lo, hi) in enumerate(zip(a, b)):
            if not lo <= hi:
                raise DomainError(f"axis {i + 1}: lower corner {lo} exceeds {hi}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def dim(self) -> int:
        return len(self.a)


def vertex_sum(fn: Callable[[Point], Fraction], box: Cuboid) -> Fraction:
    """Signed inclusion-exclusion sum of ``fn`` over the vertices of ``box``."""
    total = Fraction(0)
    for eps in iter_product((0, 1), repeat=box.dim):
        vertex = tuple(box.a[i] if e else box.b[i] for i, e in enumerate(eps))
        term = fn(vertex)
        total += -term if sum(eps) % 2 else term
    return total


class MultivariateDf(ABC):
    """Shared contract of the concrete distribution-function families.

    ``eval`` must implement the extended-real semantics (any -inf coordinate
    gives 0 for cdf families, +inf coordinates drop the constraint), and the
    margins are produced analytically from the family's own structure, never
    by numeric extraction from the evaluator.
    """

    family: ClassVar[str]

    @property
    @abstractmethod
    def dim(self) -> int: ...

    @abstractmethod
    def eval(self, t: Point) -> Fraction:
        """Exact value at a point with extended coordinates."""

    @abstractmethod
    def margin_fn(self, axis: int) -> MonotoneFn:
        """Margin along a 0-based axis."""

    @abstractmethod
    def axis_breakpoints(self, axis: int) -> tuple[Fraction, ...]:
        """Sorted distinct coordinates where structure changes along a 0-based axis."""

    @abstractmethod
    def axis_right_limit(self, t: Point, axis: int) -> tuple[Fraction, Fraction]:
        """Exact one-sided limit of eval along ``axis`` at ``t``: (limit, probe delta).

        Computed independently of the plain evaluation path: counting families
        shift the coordinate by less than the smallest positive data gap, and
        margin-composed families extrapolate the margin inside a knot-free
        window before re-applying the family's combining operation.
        """

    @abstractmethod
    def to_payload(self) -> dict:
        """JSON-ready payload; exact scalars are emitted as rational strings."""

    def support_box(self) -> tuple[Point, Point]:
        """Smallest axis-aligned box containing all structural breakpoints.

        Degenerate axes (a single breakpoint) are widened by 1 on each side so
        grids built on the box are never single points.
        """
        los, his = [], []
        for i in range(self.dim):
            bps = self.axis_breakpoints(i)
            lo, hi = bps[0], bps[-1]
            if lo == hi:
                lo, hi = lo - 1, hi + 1
            los.append(lo)
            his.append(hi)
        return tuple(los), tuple(his)

    def _require_point(self, t) -> Point:
        point = as_point(t)
        if len(point) != self.dim:
            raise DomainError(f"point has {len(point)} coordinates, expected {self.dim}")
        return point


def df_eval(df: MultivariateDf, t) -> Fraction:
    """Evaluate ``df`` at a point, validating the dimension."""
    return df.eval(df._require_point(t))


def volume(df: MultivariateDf, box: Cuboid) -> Fraction:
    """Exact volume assigned by ``df`` to the half-open box ]a, b]."""
    if box.dim != df.dim:
        raise DomainError(f"box dimension {box.dim} does not match df dimension {df.dim}")
    return vertex_sum(df.eval, box)


def margin(df: MultivariateDf, i: int) -> MonotoneFn:
    """Margin along 1-based axis ``i``."""
    if not 1 <= i <= df.dim:
        raise DomainError(f"margin index {i} out of range 1..{df.dim}")
    return df.margin_fn(i - 1)


def random_unit_cuboids(seed: int, dim: int, count: int) -> list[Cuboid]:
    """Seed-deterministic boxes in [0,1]^d with coordinates k/1000.

    Per box, axes are drawn in order and each axis takes two draws from
    :class:`SplitMix64`, sorted into the lower and upper corner.
    """
    rng = SplitMix64(seed)
    boxes = []
    for _ in range(count):
        a, b = [], []
        for _axis in range(dim):
            u = Fraction(rng.below(1001), 1000)
            v = Fraction(rng.below(1001), 1000)
            a.append(min(u, v))
            b.append(max(u, v))
        boxes.append(Cuboid(tuple(a), tuple(b)))
    return boxes


# -- axiom checking ------------------------------------------------------------


@dataclass(frozen=True)
class VolumeCheck:
    box: Cuboid
    volume: Fraction

    @property
    def holds(self) -> bool:
        return self.volume >= 0


@dataclass(frozen=True)
class LimitCheck:
    point: Point
    value: Fraction
    expected: Fraction

    @property
    def holds(self) -> bool:
        return self.value == self.expected


@dataclass(frozen=True)
class ContinuityCheck:
    point: Point
    axis: int  # 1-based in reports
    delta: Fraction
    value_at: Fraction
    value_right: Fraction

    @property
    def holds(self) -> bool:
        return self.value_at == self.value_right


@dataclass(frozen=True)
class DfReport:
    """Exact verdicts for the distribution-function axioms of one family instance."""

    volume_checks: tuple[VolumeCheck, ...]
    limit_checks: tuple[LimitCheck, ...]
    right_continuity_checks: tuple[ContinuityCheck, ...]

    @property
    def passed(self) -> bool:
        return (
            all(c.holds for c in self.volume_checks)
            and all(c.holds for c in self.limit_checks)
            and all(c.holds for c in self.right_continuity_checks)
        )

    def to_json_dict(self, max_witnesses: int = 20) -> dict:
        from .serialize import df_report_json_dict

        return df_report_json_dict(self, max_witnesses)


def _probe_points(df: MultivariateDf, seed: int, cap: int) -> list[Point]:
    """Breakpoint-grid points where right-continuity is probed.

    The full cartesian product of per-axis breakpoints is used when it has at
    most ``cap`` points; otherwise ``cap`` points are sampled deterministically
    (one per-axis index draw each) from a stream seeded with ``seed + 1`` so
    the sample is independent of the cuboid stream.
    """
    axes = [df.axis_breakpoints(i) for i in range(df.dim)]
    total = 1
    for bps in axes:
        total *= len(bps)
    if total <= cap:
        return [tuple(p) for p in iter_product(*axes)]
    rng = SplitMix64(seed + 1)
    points = []
    for _ in range(cap):
        points.append(tuple(bps[rng.below(len(bps))] for bps in axes))
    return points


def check_df_axioms(
    df: MultivariateDf,
    n_cuboids: int,
    seed: int,
    max_probe_points: int = 200,
) -> DfReport:
    """Probe non-negative volumes, the two limit conditions, and right-continuity.

    Volumes are checked on ``n_cuboids`` seeded random boxes in [0,1]^d.  The
    limit conditions expect 0 whenever one coordinate is -inf and 1 at the
    all-+inf point.  Right-continuity is probed along every axis at breakpoint
    grid points (capped at ``max_probe_points``), comparing the value with the
    independently computed one-sided limit.
    """
    if n_cuboids < 1:
        raise ValidationError(f"n_cuboids must be >= 1, got {n_cuboids}")

    volume_checks = tuple(
        VolumeCheck(box=box, volume=volume(df, box))
        for box in random_unit_cuboids(seed, df.dim, n_cuboids)
    )

    lo, hi = df.support_box()
    mid = tuple((l + h) / 2 for l, h in zip(lo, hi))
    limit_checks = []
    for i in range(df.dim):
        for others in (POS_INF, None):
            point = tuple(
                NEG_INF if j == i else (others if others is not None else mid[j])
                for j in range(df.dim)
            )
            limit_checks.append(LimitCheck(point=point, value=df.eval(point), expected=Fraction(0)))
    top = tuple(POS_INF for _ in range(df.dim))
    limit_checks.append(LimitCheck(point=top, value=df.eval(top), expected=Fraction(1)))

    continuity_checks = []
    for point in _probe_points(df, seed, max_probe_points):
        for i in range(df.dim):
            limit, delta = df.axis_right_limit(point, i)
            continuity_checks.append(
                ContinuityCheck(
                    point=point,
                    axis=i + 1,
                    delta=delta,
                    value_at=df.eval(point),
                    value_right=limit,
                )
            )

    return DfReport(
        volume_checks=volume_checks,
        limit_checks=tuple(limit_checks),
        right_continuity_checks=tuple(continuity_checks),
    )
