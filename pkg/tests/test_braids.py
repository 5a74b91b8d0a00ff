"""Braid words, geometric realization, and the motion-word invariants."""

import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

import freebraid as fb
from freebraid import BraidWord, NotPureError, ParseError
from freebraid.braids import _orient

F = Fraction
COLL = fb.collinearity_detector()


def compose(p, q):
    # apply p first, then q, both as final-position tables
    return tuple(q[p[j] - 1] for j in range(len(p)))


@st.composite
def random_braids(draw, max_n=5, max_len=6):
    n = draw(st.integers(3, max_n))
    length = draw(st.integers(0, max_len))
    letters = tuple(
        (draw(st.integers(1, n - 1)), draw(st.sampled_from([1, -1])))
        for _ in range(length)
    )
    return BraidWord(n, letters)


class TestBraidWord:
    def test_construction(self):
        b = BraidWord(4, ((1, 1), (3, -1)))
        assert b.n == 4 and len(b.letters) == 2

    @pytest.mark.parametrize(
        "n,letters",
        [(1, ()), (3, ((0, 1),)), (3, ((3, 1),)), (3, ((1, 2),)), (3, ((1, 0),))],
    )
    def test_rejects(self, n, letters):
        with pytest.raises(ValueError):
            BraidWord(n, letters)

    def test_parse(self):
        b = fb.parse_artin("s1 s2^-1", 3)
        assert b.letters == ((1, 1), (2, -1))

    def test_parse_empty(self):
        assert fb.parse_artin("", 3).letters == ()
        assert fb.parse_artin("   ", 3).letters == ()

    @pytest.mark.parametrize("text", ["s0", "s3", "t1", "s1^2", "s1^-2", "s"])
    def test_parse_rejects(self, text):
        with pytest.raises(ParseError):
            fb.parse_artin(text, 3)

    def test_format(self):
        b = BraidWord(4, ((2, 1), (1, -1)))
        assert fb.format_artin(b) == "s2 s1^-1"
        assert fb.format_artin(BraidWord(4, ())) == ""

    @given(random_braids())
    @settings(max_examples=50, deadline=None)
    def test_roundtrip(self, b):
        assert fb.parse_artin(fb.format_artin(b), b.n) == b


class TestPermutation:
    def test_single_crossing(self):
        assert fb.permutation_of(fb.parse_artin("s1", 3)) == (2, 1, 3)

    def test_two_crossings(self):
        assert fb.permutation_of(fb.parse_artin("s1 s2", 3)) == (3, 1, 2)

    def test_full_twist_cubed_is_identity(self):
        b = fb.parse_artin("s1 s2 s1 s2 s1 s2", 3)
        assert fb.permutation_of(b) == (1, 2, 3)

    def test_inverse_cancels(self):
        assert fb.permutation_of(fb.parse_artin("s2 s2^-1", 4)) == (1, 2, 3, 4)

    @given(random_braids(max_len=4), random_braids(max_len=4))
    @settings(max_examples=50, deadline=None)
    def test_homomorphism(self, b1, b2):
        b1 = BraidWord(5, b1.letters) if b1.n != 5 else b1
        b2 = BraidWord(5, b2.letters) if b2.n != 5 else b2
        joined = BraidWord(5, b1.letters + b2.letters)
        assert fb.permutation_of(joined) == compose(
            fb.permutation_of(b1), fb.permutation_of(b2)
        )


class TestPurePower:
    def test_half_twist_squares(self):
        power, m = fb.pure_power(fb.parse_artin("s1", 3))
        assert m == 2
        assert power.letters == ((1, 1), (1, 1))
        assert fb.permutation_of(power) == (1, 2, 3)

    def test_pure_braid_power_one(self):
        b = fb.parse_artin("s1 s1", 3)
        assert fb.pure_power(b) == (b, 1)

    def test_three_cycle_cubes(self):
        _, m = fb.pure_power(fb.parse_artin("s1 s2", 3))
        assert m == 3


class TestHomePositions:
    def test_requires_three_strands(self):
        with pytest.raises(ValueError):
            fb.home_positions(2)

    @pytest.mark.parametrize("n", [3, 4, 5, 6])
    def test_no_three_collinear(self, n):
        pts = fb.home_positions(n)
        for a, b, c in itertools.combinations(pts, 3):
            assert _orient(a, b, c) != 0

    @pytest.mark.parametrize("n", [3, 4, 5, 6])
    def test_convex_counterclockwise(self, n):
        pts = fb.home_positions(n)
        for i in range(n):
            assert _orient(pts[i], pts[(i + 1) % n], pts[(i + 2) % n]) > 0

    @pytest.mark.parametrize("n", [4, 5, 6])
    def test_no_four_concyclic(self, n):
        from freebraid.braids import _concyclic_det

        pts = fb.home_positions(n)
        for quad in itertools.combinations(pts, 4):
            assert _concyclic_det(quad) != 0

    def test_deterministic(self):
        assert fb.home_positions(5) == fb.home_positions(5)


class TestRealize:
    def test_requires_three_strands(self):
        with pytest.raises(ValueError):
            fb.realize(BraidWord(2, ((1, 1),)))

    def test_empty_braid_is_static(self):
        s = fb.realize(BraidWord(3, ()))
        homes = fb.home_positions(3)
        assert s.segment_count == 1
        for i in range(1, 4):
            assert s.position(i, F(1, 2)) == homes[i - 1]

    def test_starts_at_homes(self):
        s = fb.realize(fb.parse_artin("s1 s2^-1", 4))
        homes = fb.home_positions(4)
        assert tuple(s.position(i, F(0)) for i in range(1, 5)) == homes

    def test_ends_at_permuted_homes(self):
        b = fb.parse_artin("s1", 3)
        s = fb.realize(b)
        homes = fb.home_positions(3)
        perm = fb.permutation_of(b)
        for strand in range(1, 4):
            assert s.position(strand, F(1)) == homes[perm[strand - 1] - 1]

    def test_deterministic(self):
        b = fb.parse_artin("s2 s1", 4)
        assert fb.realize(b) == fb.realize(b)

    def test_styles_differ_geometrically(self):
        b = fb.parse_artin("s1", 3)
        assert fb.realize(b, style="standard") != fb.realize(b, style="wide")

    def test_unknown_style(self):
        with pytest.raises(ValueError):
            fb.realize(fb.parse_artin("s1", 3), style="loopy")

    @pytest.mark.parametrize("text,n", [("s1", 3), ("s1 s2^-1", 3), ("s2 s1 s3", 4)])
    def test_realizations_are_pleasant(self, text, n):
        s = fb.realize(fb.parse_artin(text, n))
        assert fb.pleasantness_check(s, COLL).pleasant


class TestInvariant:
    def test_empty_braid(self):
        w = fb.invariant_c(BraidWord(3, ()))
        assert w.signature == fb.GroupSignature(3, 3)
        assert w.letters == ()

    def test_single_crossing(self):
        w = fb.invariant_c(fb.parse_artin("s1", 3))
        assert fb.format_word(w, include_signature=True) == "n=3 k=3: (1 2 3)"

    def test_crossing_then_inverse_cancels(self):
        w = fb.invariant_c(fb.parse_artin("s1 s1^-1", 3))
        assert len(w) == 2
        assert fb.are_equal(w, fb.Word(w.signature, ())) == "equal"

    def test_yang_baxter_pair_agrees_n3(self):
        wa = fb.invariant_c(fb.parse_artin("s1 s2 s1", 3))
        wb = fb.invariant_c(fb.parse_artin("s2 s1 s2", 3))
        assert wa.letters == ((1, 2, 3),) * 3
        assert wb.letters == ((1, 2, 3),) * 3

    def test_yang_baxter_pair_agrees_n4(self):
        wa = fb.invariant_c(fb.parse_artin("s1 s2 s1", 4))
        wb = fb.invariant_c(fb.parse_artin("s2 s1 s2", 4))
        assert fb.are_equal(wa, wb) == "equal"

    def test_parity_stable_across_seeds(self):
        b = fb.parse_artin("s1 s1", 3)
        bits = {fb.parity_vector(fb.invariant_c(b, seed=s)).bits for s in range(3)}
        assert len(bits) == 1

    def test_styles_agree_up_to_equality(self):
        for text, n in [("s1 s2", 4), ("s1^-1 s2", 3)]:
            b = fb.parse_artin(text, n)
            wa = fb.invariant_c(b, style="standard")
            wb = fb.invariant_c(b, style="wide")
            assert fb.are_equal(wa, wb) == "equal"

    def test_quadrisecant_signature(self):
        w = fb.invariant_c4(fb.parse_artin("s1 s1^-1", 4))
        assert w.signature == fb.GroupSignature(4, 4)
        assert w.letters == ((1, 2, 3, 4), (1, 2, 3, 4))

    def test_quadrisecant_needs_four_strands(self):
        with pytest.raises(ValueError):
            fb.invariant_c4(fb.parse_artin("s1", 3))


class TestClosedInvariant:
    def test_rejects_non_pure(self):
        with pytest.raises(NotPureError):
            fb.closed_invariant(fb.parse_artin("s1", 3))

    def test_empty(self):
        cw = fb.closed_invariant(BraidWord(3, ()))
        assert cw == fb.CyclicWord(fb.GroupSignature(3, 3), ())

    def test_generator_square(self):
        cw = fb.closed_invariant(fb.parse_artin("s1 s1", 3))
        assert cw.letters == ((1, 2, 3), (1, 2, 3))

    def test_conjugation_invariance_sample(self):
        base = fb.closed_invariant(fb.parse_artin("s1 s1", 3))
        moved = fb.closed_invariant(fb.parse_artin("s2 s1 s1 s2^-1", 3))
        assert fb.are_conjugate(base, moved) == "equal"


class TestCertificate:
    def test_exact_certificate(self):
        cert = fb.trisecant_certificate(fb.parse_artin("s1 s2", 4))
        assert cert.events == 4
        assert cert.lower_bound == 4
        assert cert.ok and cert.exact

    def test_lower_bound_matches_complexity(self):
        b = fb.parse_artin("s1 s2 s1 s2", 4)
        cert = fb.trisecant_certificate(b)
        assert cert.exact
        assert cert.lower_bound == fb.complexity(fb.invariant_c(b))
        assert cert.lower_bound <= cert.events

    def test_budget_starved_certificate_still_sound(self):
        b = fb.parse_artin("s1 s2 s1 s2", 4)
        cert = fb.trisecant_certificate(b, budget=1)
        assert not cert.exact
        assert cert.ok
        assert cert.lower_bound <= cert.events == 8


class TestArtinRelations:
    def test_relation_names(self):
        assert fb.RELATIONS == ("cancel", "swap", "yang_baxter")

    def test_cancel(self):
        b = fb.parse_artin("s1 s1^-1 s2", 3)
        assert fb.apply_artin_relation(b, "cancel", 0) == fb.parse_artin("s2", 3)

    def test_cancel_other_order(self):
        b = fb.parse_artin("s1^-1 s1", 3)
        assert fb.apply_artin_relation(b, "cancel", 0).letters == ()

    def test_cancel_rejects_same_sign(self):
        with pytest.raises(fb.MoveNotApplicableError):
            fb.apply_artin_relation(fb.parse_artin("s1 s1", 3), "cancel", 0)

    def test_swap(self):
        b = fb.parse_artin("s1 s3", 4)
        assert fb.apply_artin_relation(b, "swap", 0) == fb.parse_artin("s3 s1", 4)

    def test_swap_rejects_adjacent(self):
        with pytest.raises(fb.MoveNotApplicableError):
            fb.apply_artin_relation(fb.parse_artin("s1 s2", 4), "swap", 0)

    def test_yang_baxter(self):
        b = fb.parse_artin("s1 s2 s1", 3)
        assert fb.apply_artin_relation(b, "yang_baxter", 0) == fb.parse_artin("s2 s1 s2", 3)

    def test_yang_baxter_negative(self):
        b = fb.parse_artin("s2^-1 s1^-1 s2^-1", 3)
        got = fb.apply_artin_relation(b, "yang_baxter", 0)
        assert got == fb.parse_artin("s1^-1 s2^-1 s1^-1", 3)

    def test_yang_baxter_rejects_mixed_signs(self):
        with pytest.raises(fb.MoveNotApplicableError):
            fb.apply_artin_relation(fb.parse_artin("s1 s2 s1^-1", 3), "yang_baxter", 0)

    def test_unknown_relation(self):
        with pytest.raises(ValueError):
            fb.apply_artin_relation(fb.parse_artin("s1", 3), "flip", 0)

    def test_position_out_of_range(self):
        with pytest.raises(fb.MoveNotApplicableError):
            fb.apply_artin_relation(fb.parse_artin("s1", 3), "cancel", 0)

    def test_enumerate(self):
        b = fb.parse_artin("s1 s1^-1 s3", 4)
        got = fb.enumerate_artin_rewrites(b)
        kinds = {(rel, pos) for rel, pos, _ in got}
        assert ("cancel", 0) in kinds
        assert ("swap", 1) in kinds

    @given(random_braids(max_len=5))
    @settings(max_examples=40, deadline=None)
    def test_rewrites_preserve_permutation(self, b):
        perm = fb.permutation_of(b)
        for _, _, b2 in fb.enumerate_artin_rewrites(b):
            assert fb.permutation_of(b2) == perm

    @pytest.mark.parametrize("text,n", [("s1 s1^-1 s2", 3), ("s1 s3 s2", 4)])
    def test_rewrites_preserve_invariant(self, text, n):
        b = fb.parse_artin(text, n)
        w = fb.invariant_c(b)
        for _, _, b2 in fb.enumerate_artin_rewrites(b):
            assert fb.are_equal(w, fb.invariant_c(b2), budget=200_000) == "equal"
