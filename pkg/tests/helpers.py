"""Shared test plumbing: independent oracles and seeded random generators.

Everything here deliberately avoids the closed-form code paths it is used to
check: the scan oracle walks a literal grid of evaluation points, the
right-increase test reads the knot structure directly, and the box-count
oracle counts rows one by one.
"""

from __future__ import annotations

from bisect import bisect_right
from fractions import Fraction

from copulacheck import Knot, MonotoneFn, NEG_INF, POS_INF, SplitMix64


def grid(lo, hi, m) -> list[Fraction]:
    """m+1 equally spaced rationals from lo to hi inclusive."""
    lo, hi = Fraction(lo), Fraction(hi)
    return [lo + Fraction(k, m) * (hi - lo) for k in range(m + 1)]


def merged(points, extra) -> list[Fraction]:
    return sorted(set(points) | set(extra))


# -- brute-force scan oracle for the generalized inverses ----------------------


def scan_points(fn: MonotoneFn, lo: Fraction, hi: Fraction, step: Fraction) -> list[Fraction]:
    pts = {lo + k * step for k in range(int((hi - lo) / step) + 1)}
    pts.update(x for x in fn.knot_xs() if lo <= x <= hi)
    return sorted(pts)


def scan_inf(fn: MonotoneFn, u: Fraction, strict: bool, lo, hi, step):
    """First scan point whose value clears u, and its predecessor on the scan set."""
    prev = None
    for x in scan_points(fn, Fraction(lo), Fraction(hi), Fraction(step)):
        v = fn.eval(x)
        if (v > u) if strict else (v >= u):
            return x, prev
        prev = x
    return None, prev


def assert_matches_scan(fn: MonotoneFn, u: Fraction, result, strict: bool, step=Fraction(1, 50)):
    """The closed-form infimum must land in the exact bracket the scan pins down.

    No scan point below the true infimum can satisfy the predicate and every
    scan point above it must, so the scan's first hit and its predecessor
    bracket the true value; with rational arithmetic both comparisons are
    exact.
    """
    lo = fn.knot_xs()[0] - 1
    hi = fn.knot_xs()[-1] + 1
    hit, prev = scan_inf(fn, u, strict, lo, hi, step)
    if result == POS_INF:
        assert hit is None, f"scan found {hit} but closed form says the set is empty"
    elif result == NEG_INF:
        assert hit == lo, f"closed form says all of R but scan starts hitting at {hit}"
    else:
        assert hit is not None, f"closed form {result} but scan found nothing"
        assert result <= hit, f"closed form {result} above scan hit {hit}"
        assert prev is None or prev <= result, f"scan point {prev} below closed form {result}"


# -- structural right-increase oracle ------------------------------------------


def is_right_increase(fn: MonotoneFn, x: Fraction) -> bool:
    """True iff the function exceeds its value at x immediately to the right.

    Read off the knot list: right of the last knot and left of the first the
    function is constant; in between, the piece containing x rises iff its
    closing left-limit exceeds its opening value.
    """
    ks = fn.knots
    if x >= ks[-1].x or x < ks[0].x:
        return False
    i = bisect_right([k.x for k in ks], x) - 1
    return ks[i].value < ks[i + 1].left


# -- seeded random generators ----------------------------------------------------


def random_fraction(rng: SplitMix64, max_den: int = 100, span: int = 200) -> Fraction:
    q = 1 + rng.below(max_den)
    p = rng.below(2 * span + 1) - span
    return Fraction(p, q)


def random_monotone(rng: SplitMix64, max_knots: int = 6) -> MonotoneFn:
    """Random mixture of jumps, flats, and strictly rising pieces.

    Levels are drawn from a small per-function pool so exact ties (and with
    them flats, continuity points, and degenerate constants) occur often;
    sorting 2n pooled draws and pairing them off yields a valid knot list by
    construction.  All knot data are rationals with denominator <= 100.
    """
    n = 1 + rng.below(max_knots)
    xs: set[Fraction] = set()
    while len(xs) < n:
        xs.add(random_fraction(rng))
    pool = [random_fraction(rng, span=100) for _ in range(4)] + [Fraction(0), Fraction(1)]
    levels = sorted(pool[rng.below(len(pool))] for _ in range(2 * n))
    return MonotoneFn(
        tuple(
            Knot(x, levels[2 * i], levels[2 * i + 1]) for i, x in enumerate(sorted(xs))
        )
    )


def random_rows(rng: SplitMix64, n: int, dim: int, den: int = 20) -> list[tuple[Fraction, ...]]:
    """Random dataset with coordinates k/den inside [0, 1]."""
    return [
        tuple(Fraction(rng.below(den + 1), den) for _ in range(dim)) for _ in range(n)
    ]


def count_in_box(rows, a, b) -> int:
    """Rows falling in the half-open box ]a, b], counted directly."""
    return sum(
        1 for r in rows if all(ai < ri <= bi for ri, ai, bi in zip(r, a, b))
    )
