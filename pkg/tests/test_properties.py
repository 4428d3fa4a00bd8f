"""Invariant checks on randomly generated monotone functions.

Two generators feed these: a hypothesis strategy (shrinking-friendly, small)
and the seeded splitmix corpus used by the acceptance suite.  Both build knot
lists that are valid by construction, mixing jumps, flats, and strictly
rising pieces.
"""

from fractions import Fraction

from hypothesis import given, settings, strategies as st

from copulacheck import Knot, MonotoneFn, NEG_INF, SplitMix64
from helpers import assert_matches_scan, grid, is_right_increase, merged, random_monotone

F = Fraction


@st.composite
def monotone_fns(draw):
    n = draw(st.integers(min_value=1, max_value=4))
    xs = draw(
        st.lists(
            st.fractions(min_value=-4, max_value=4, max_denominator=12),
            min_size=n,
            max_size=n,
            unique=True,
        )
    )
    levels = sorted(
        draw(
            st.lists(
                st.sampled_from([F(0), F(1, 4), F(1, 3), F(1, 2), F(2, 3), F(1)]),
                min_size=2 * n,
                max_size=2 * n,
            )
        )
    )
    return MonotoneFn(
        tuple(Knot(x, levels[2 * i], levels[2 * i + 1]) for i, x in enumerate(sorted(xs)))
    )


def level_grid(fn, m=8):
    c, d = fn.inf_value, fn.sup_value
    return merged((c + F(k, m) * (d - c) for k in range(m + 1)), fn.critical_levels())


def point_grid(fn, m=8):
    lo, hi = fn.knot_xs()[0] - 1, fn.knot_xs()[-1] + 1
    return merged(grid(lo, hi, m), fn.knot_xs())


@given(monotone_fns())
@settings(max_examples=60, deadline=None)
def test_inverse_composition_bounds(fn):
    for u in level_grid(fn):
        # G(G^{-1}(u)) >= u, with equality forced at the infimum where the
        # inverse is -inf
        value = fn.eval(fn.gen_inverse(u))
        assert value >= u
        if fn.gen_inverse(u) == NEG_INF:
            assert u == fn.inf_value
    for x in point_grid(fn):
        assert fn.gen_inverse(fn.eval(x)) <= x


@given(monotone_fns())
@settings(max_examples=60, deadline=None)
def test_inverse_monotone_and_ordered(fn):
    us = level_grid(fn)
    values = [fn.gen_inverse(u) for u in us]
    assert all(a <= b for a, b in zip(values, values[1:]))
    for u in us:
        assert fn.gen_inverse_right(u) >= fn.gen_inverse(u)


@given(monotone_fns())
@settings(max_examples=60, deadline=None)
def test_inverse_left_continuity(fn):
    for u in level_grid(fn):
        if u == fn.inf_value:
            continue
        assert fn.gen_inverse_left_limit(u) == fn.gen_inverse(u)


@given(monotone_fns())
@settings(max_examples=60, deadline=None)
def test_round_trip_dominates_and_characterized(fn):
    for x in point_grid(fn):
        lhs = fn.gen_inverse_right(fn.eval(x))
        assert lhs >= x
        assert (lhs == x) == is_right_increase(fn, x)


@given(monotone_fns())
@settings(max_examples=25, deadline=None)
def test_closed_form_matches_scan(fn):
    for u in level_grid(fn, m=4):
        assert_matches_scan(fn, u, fn.gen_inverse(u), strict=False, step=F(1, 24))
        assert_matches_scan(fn, u, fn.gen_inverse_right(u), strict=True, step=F(1, 24))


def test_seeded_corpus_spot_checks():
    rng = SplitMix64(2024)
    for _ in range(40):
        fn = random_monotone(rng)
        for u in level_grid(fn, m=6):
            assert fn.eval(fn.gen_inverse(u)) >= u
            assert fn.gen_inverse_right(u) >= fn.gen_inverse(u)
        for x in point_grid(fn, m=6):
            assert fn.gen_inverse(fn.eval(x)) <= x
            lhs = fn.gen_inverse_right(fn.eval(x))
            assert lhs >= x
            assert (lhs == x) == is_right_increase(fn, x)
