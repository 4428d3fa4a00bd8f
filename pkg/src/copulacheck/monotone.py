"""Exact engine for one-dimensional non-decreasing right-continuous functions.

A :class:`MonotoneFn` is a finite list of knots ``(x, left, value)`` encoding a
piecewise-linear-with-jumps function G on the whole real line:

* G(x) = ``knots[0].left`` for x below the first knot (this constant is the
  infimum ``c``);
* on each ``[x_k, x_{k+1})`` G runs affinely from ``(x_k, value_k)`` to the
  open right endpoint ``(x_{k+1}, left_{k+1})``;
* G(x) = ``knots[-1].value`` at and beyond the last knot (the supremum ``d``).

Right-continuity is structural: every piece is closed on the left.  The module
offers exact evaluation, one-sided limits, the two generalized inverses

    gen_inverse(u)       = inf { x : G(x) >= u }
    gen_inverse_right(u) = inf { x : G(x) > u }

and a report runner checking, point by point, the classical inverse
inequalities G(G^-1(u)) >= u and G^-1(G(x)) <= x, left-continuity of the
inverse, and the round-trip identity gen_inverse_right(G(x)) == x.  The
round-trip identity genuinely fails wherever G is not strictly increasing to
the right of x (flat pieces, constant tails); those points are reported as
witnesses, never raised as errors.

All arithmetic is rational, so every verdict is exact with tolerance zero.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DomainError, ValidationError
from .scalars import NEG_INF, POS_INF, ExtScalar, as_ext, as_scalar, is_finite


@dataclass(frozen=True)
class Knot:
    """One breakpoint: ``left`` is the limit of G from below at ``x``, ``value`` is G(x)."""

    x: Fraction
    left: Fraction
    value: Fraction


def _coerce_knot(entry, index: int) -> Knot:
    if isinstance(entry, Knot):
        return Knot(as_scalar(entry.x), as_scalar(entry.left), as_scalar(entry.value))
    try:
        x, left, value = entry
    except (TypeError, ValueError) as exc:
        raise ValidationError(f"knot index {index}: expected (x, left, value)") from exc
    return Knot(as_scalar(x), as_scalar(left), as_scalar(value))


@dataclass(frozen=True)
class MonotoneFn:
    """Non-decreasing right-continuous function with finitely many breakpoints."""

    knots: tuple[Knot, ...]
    _xs: tuple[Fraction, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        knots = tuple(_coerce_knot(k, i) for i, k in enumerate(self.knots))
        if not knots:
            raise ValidationError("a monotone function needs at least one knot")
        for i, k in enumerate(knots):
            if k.left > k.value:
                raise ValidationError(
                    f"knot index {i}: left limit {k.left} exceeds value {k.value}"
                )
            if i > 0:
                prev = knots[i - 1]
                if k.x <= prev.x:
                    raise ValidationError(
                        f"knot index {i}: abscissa {k.x} not greater than {prev.x}"
                    )
                if prev.value > k.left:
                    raise ValidationError(
                        f"knot index {i}: left limit {k.left} below previous value {prev.value}"
                    )
        object.__setattr__(self, "knots", knots)
        object.__setattr__(self, "_xs", tuple(k.x for k in knots))

    # -- range and endpoints -------------------------------------------------

    @property
    def inf_value(self) -> Fraction:
        """c = inf G, attained as the constant level left of the first knot."""
        return self.knots[0].left

    @property
    def sup_value(self) -> Fraction:
        """d = sup G, attained at and beyond the last knot."""
        return self.knots[-1].value

    def lep(self) -> ExtScalar:
        """Lower end-point: inf of the set where G exceeds its infimum."""
        return self.gen_inverse_right(self.inf_value)

    def uep(self) -> ExtScalar:
        """Upper end-point: sup of the set where G stays below its supremum."""
        if self.inf_value == self.sup_value:
            return NEG_INF
        return self.gen_inverse(self.sup_value)

    def is_cdf(self) -> bool:
        return self.inf_value == 0 and self.sup_value == 1

    def knot_xs(self) -> tuple[Fraction, ...]:
        return self._xs

    def critical_levels(self) -> tuple[Fraction, ...]:
        """Sorted distinct levels at which the inverse can change its local form."""
        levels = {k.left for k in self.knots} | {k.value for k in self.knots}
        return tuple(sorted(levels))

    # -- evaluation ----------------------------------------------------------

    def eval(self, x: ExtScalar) -> Fraction:
        """Exact G(x); the infinities map to the infimum and supremum."""
        x = as_ext(x)
        if not is_finite(x):
            return self.inf_value if x == NEG_INF else self.sup_value
        i = bisect_right(self._xs, x) - 1
        if i < 0:
            return self.inf_value
        k = self.knots[i]
        if i == len(self.knots) - 1 or x == k.x:
            return k.value
        nxt = self.knots[i + 1]
        return k.value + (nxt.left - k.value) * (x - k.x) / (nxt.x - k.x)

    def eval_left(self, x) -> Fraction:
        """Exact limit of G from below at finite x."""
        x = as_scalar(x)
        i = bisect_right(self._xs, x) - 1
        if i < 0:
            return self.inf_value
        k = self.knots[i]
        if x == k.x:
            return k.left
        if i == len(self.knots) - 1:
            return k.value
        nxt = self.knots[i + 1]
        # interior of a piece: G is continuous there, left limit equals value
        return k.value + (nxt.left - k.value) * (x - k.x) / (nxt.x - k.x)

    # -- generalized inverses ------------------------------------------------

    def _require_level(self, u) -> Fraction:
        u = as_scalar(u)
        if not (self.inf_value <= u <= self.sup_value):
            raise DomainError(
                f"level {u} outside the range [{self.inf_value}, {self.sup_value}]"
            )
        return u

    def gen_inverse(self, u) -> ExtScalar:
        """inf { x : G(x) >= u }; -inf at u = inf G, where the set is all of R."""
        u = self._require_level(u)
        if u == self.inf_value:
            return NEG_INF
        for i, k in enumerate(self.knots):
            if k.value >= u:
                if i == 0:
                    return k.x
                prev = self.knots[i - 1]
                if k.left >= u:
                    # the piece before k rises through u: solve the affine crossing
                    return prev.x + (u - prev.value) * (k.x - prev.x) / (k.left - prev.value)
                return k.x
        raise AssertionError("unreachable: the last knot attains the supremum")

    def gen_inverse_right(self, u) -> ExtScalar:
        """inf { x : G(x) > u }; +inf at u = sup G, where the set is empty."""
        u = self._require_level(u)
        for i, k in enumerate(self.knots):
            if k.value > u:
                if i == 0:
                    return k.x
                prev = self.knots[i - 1]
                if k.left > u:
                    return prev.x + (u - prev.value) * (k.x - prev.x) / (k.left - prev.value)
                return k.x
        return POS_INF

    def gen_inverse_left_limit(self, u) -> Fraction:
        """Exact limit of gen_inverse from below at u, for u in (inf G, sup G].

        On a level window free of critical levels the inverse is affine (inside
        a strictly rising piece) or constant (across a jump), so two
        evaluations just below u extrapolate the limit exactly.
        """
        u = self._require_level(u)
        if u == self.inf_value:
            raise DomainError(f"left limit of the inverse undefined at the infimum {u}")
        below = [lv for lv in self.critical_levels() if lv < u]
        delta = (u - max(below)) / 2 if below else Fraction(1)
        r1 = self.gen_inverse(u - delta)
        r2 = self.gen_inverse(u - delta / 2)
        assert is_finite(r1) and is_finite(r2)
        return 2 * r2 - r1


def make_monotone(knots: Iterable) -> MonotoneFn:
    """Validated constructor; accepts Knot instances or (x, left, value) triples."""
    return MonotoneFn(tuple(knots))


def uniform_cdf(lo=0, hi=1) -> MonotoneFn:
    """Continuous uniform cdf on [lo, hi]."""
    lo, hi = as_scalar(lo), as_scalar(hi)
    if lo >= hi:
        raise ValidationError(f"uniform_cdf needs lo < hi, got [{lo}, {hi}]")
    return MonotoneFn((Knot(lo, Fraction(0), Fraction(0)), Knot(hi, Fraction(1), Fraction(1))))


def discrete_cdf(weights: dict) -> MonotoneFn:
    """Step cdf of a finite discrete distribution {atom: mass}; masses must sum to 1."""
    if not weights:
        raise ValidationError("discrete_cdf needs at least one atom")
    items = sorted((as_scalar(x), as_scalar(w)) for x, w in weights.items())
    total = sum(w for _, w in items)
    if any(w < 0 for _, w in items):
        raise ValidationError("discrete_cdf: negative mass")
    if total != 1:
        raise ValidationError(f"discrete_cdf: masses sum to {total}, expected 1")
    knots = []
    acc = Fraction(0)
    for x, w in items:
        knots.append(Knot(x, acc, acc + w))
        acc += w
    return MonotoneFn(tuple(knots))


# -- verification reports ----------------------------------------------------


@dataclass(frozen=True)
class FfResult:
    """One round-trip check: lhs = gen_inverse_right(G, G(x)); holds iff lhs == x."""

    x: Fraction
    lhs: ExtScalar
    holds: bool


@dataclass(frozen=True)
class CheckEntry:
    """One exact comparison; the meaning of lhs/rhs depends on the check."""

    point: Fraction
    lhs: ExtScalar
    rhs: ExtScalar
    holds: bool


@dataclass(frozen=True)
class LemmaReport:
    """Exact verdicts for the inverse-function property suite of one MonotoneFn."""

    checks_a: tuple[CheckEntry, ...]
    checks_b: tuple[CheckEntry, ...]
    left_continuity: tuple[CheckEntry, ...]
    ff_results: tuple[FfResult, ...]

    @property
    def ff_witnesses(self) -> tuple[FfResult, ...]:
        return tuple(r for r in self.ff_results if not r.holds)

    @property
    def pass_a(self) -> bool:
        return all(e.holds for e in self.checks_a)

    @property
    def pass_b(self) -> bool:
        return all(e.holds for e in self.checks_b)

    @property
    def pass_leftcont(self) -> bool:
        return all(e.holds for e in self.left_continuity)

    @property
    def passed(self) -> bool:
        """True only when every check holds and there are no round-trip witnesses."""
        return self.pass_a and self.pass_b and self.pass_leftcont and not self.ff_witnesses

    def to_json_dict(self, max_witnesses: int = 20) -> dict:
        from .serialize import lemma_report_json_dict

        return lemma_report_json_dict(self, max_witnesses)


def ff_check(fn: MonotoneFn, xs: Sequence) -> list[FfResult]:
    """Round-trip check gen_inverse_right(G, G(x)) == x at each x.

    The one-sided bound lhs >= x holds for every valid MonotoneFn and is
    asserted unconditionally; equality failures are returned as results with
    ``holds == False``, not raised.
    """
    out = []
    for raw in xs:
        x = as_scalar(raw)
        lhs = fn.gen_inverse_right(fn.eval(x))
        if not lhs >= x:
            raise AssertionError(f"one-sided bound violated at x={x}: lhs={lhs}")
        out.append(FfResult(x=x, lhs=lhs, holds=lhs == x))
    return out


def lemma_report(fn: MonotoneFn, us: Sequence, xs: Sequence) -> LemmaReport:
    """Run the full inverse-property suite on level grid ``us`` and point grid ``xs``.

    Raises DomainError if some u lies outside [inf G, sup G].  Left-continuity
    is only defined strictly above the infimum, so grid levels equal to inf G
    are skipped for that check.
    """
    us = [fn._require_level(u) for u in us]
    xs = [as_scalar(x) for x in xs]

    checks_a = []
    for u in us:
        value = fn.eval(fn.gen_inverse(u))
        checks_a.append(CheckEntry(point=u, lhs=value, rhs=u, holds=value >= u))

    checks_b = []
    for x in xs:
        inv = fn.gen_inverse(fn.eval(x))
        checks_b.append(CheckEntry(point=x, lhs=inv, rhs=x, holds=inv <= x))

    left_continuity = []
    for u in us:
        if u == fn.inf_value:
            continue
        limit = fn.gen_inverse_left_limit(u)
        at = fn.gen_inverse(u)
        left_continuity.append(CheckEntry(point=u, lhs=limit, rhs=at, holds=limit == at))

    return LemmaReport(
        checks_a=tuple(checks_a),
        checks_b=tuple(checks_b),
        left_continuity=tuple(left_continuity),
        ff_results=tuple(ff_check(fn, xs)),
    )
