"""Dominant-term systems, certified root finding, and accumulation curves."""

from __future__ import annotations

import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from linkzeros.asymptotics import (
    RootFindingError,
    closed_form_locus_distance,
    find_roots,
    jones_zeros,
    lambda_values,
    locus_landmarks,
    reconstruct_eval,
    region_classify,
    trace_locus,
    u_magnitude,
)
from linkzeros.jones import jones_family_closed


def _members(hi):
    for fam, lo in (("A", 3), ("B", 3), ("E", 2), ("F", 5)):
        for n in range(lo, hi + 1):
            if fam == "F" and n % 2 == 0:
                continue
            yield fam, n


# --- root finding ------------------------------------------------------------


def test_find_roots_quadratic_golden():
    roots = sorted(find_roots([1, -3, 1]), key=lambda z: z.real)
    assert abs(roots[0] - (3 - math.sqrt(5)) / 2) <= 1e-12
    assert abs(roots[1] - (3 + math.sqrt(5)) / 2) <= 1e-12


def test_find_roots_known_cubic():
    # (z-1)(z-2)(z-3) = z^3 - 6z^2 + 11z - 6
    roots = sorted(find_roots([-6, 11, -6, 1]), key=lambda z: z.real)
    for got, want in zip(roots, (1, 2, 3)):
        assert abs(got - want) <= 1e-10


def test_find_roots_linear_and_validation():
    (root,) = find_roots([3, -2])
    assert abs(root - 1.5) <= 1e-15
    with pytest.raises(ValueError):
        find_roots([5])
    with pytest.raises(ValueError):
        find_roots([1, 2, 0])  # vanishing leading coefficient
    with pytest.raises(ValueError):
        find_roots([0, 1, 1])  # zero constant term: strip roots at 0 first


@given(
    st.lists(
        st.tuples(st.floats(0.5, 2.0), st.floats(0, 2 * math.pi)),
        min_size=2,
        max_size=8,
    ),
    st.randoms(),
)
@settings(max_examples=30, deadline=None)
def test_find_roots_recovers_planted_roots(polar, rnd):
    planted = [r * cmath.exp(1j * th) for r, th in polar]
    # keep the roots separated so the match tolerance is meaningful
    for i, a in enumerate(planted):
        for b in planted[:i]:
            if abs(a - b) < 0.05:
                return
    coeffs = np.poly(planted)[::-1]  # ascending
    got = sorted(find_roots(list(coeffs)), key=lambda z: (z.real, z.imag))
    want = sorted(planted, key=lambda z: (z.real, z.imag))
    assert len(got) == len(want)
    for g, w in zip(got, want):
        assert abs(g - w) <= 1e-6


def test_find_roots_survives_huge_coefficient_range():
    # dominant-balance polynomial with a 1e12 spread still certifies
    coeffs = [1e12, 3.0, -2.0, 1e-6]
    roots = find_roots(coeffs)
    for z in roots:
        val = coeffs[0] + coeffs[1] * z + coeffs[2] * z**2 + coeffs[3] * z**3
        assert abs(val) <= 1e-3 * max(abs(c) for c in coeffs)


# --- Jones zeros ----------------------------------------------------------------


def test_a4_zeros_are_primitive_tenth_roots():
    zs = jones_zeros("A", 4)
    expected = [
        cmath.exp(2j * math.pi * k / 10) for k in (1, 3, 7, 9)
    ]
    expected.sort(key=lambda z: cmath.phase(z) % (2 * math.pi))
    assert len(zs) == 4
    for got, want in zip(zs, expected):
        assert abs(got - want) <= 1e-10


def test_zero_count_equals_crossing_number():
    for fam, n in _members(9):
        v = jones_family_closed(fam, n)
        _, body = v.strip_monomial()
        zs = jones_zeros(fam, n)
        assert len(zs) == len(body) - 1, f"{fam}_{n}"


def test_zeros_are_conjugation_closed_and_angle_sorted():
    for fam, n in (("A", 10), ("B", 8), ("E", 6), ("F", 9)):
        zs = jones_zeros(fam, n)
        angles = [cmath.phase(z) % (2 * math.pi) for z in zs]
        assert angles == sorted(angles)
        for z in zs:
            assert min(abs(z.conjugate() - w) for w in zs) <= 1e-8
            assert abs(z) > 1e-12


def test_zeros_actually_vanish():
    v = jones_family_closed("B", 8)
    for z in jones_zeros("B", 8):
        assert abs(v.eval(z)) <= 1e-7


def test_e_family_zeros_spread_outward():
    # the E accumulation set is unbounded; already at n=12 some zeros sit
    # far outside the unit circle
    zs = jones_zeros("E", 12)
    assert max(abs(z) for z in zs) > 3.0


# --- dominant-term reconstruction -------------------------------------------------


def test_reconstruct_eval_matches_exact_polynomial():
    rng = np.random.default_rng(11)
    for fam in "ABEF":
        for _ in range(25):
            n = int(rng.integers(5, 10))
            if fam == "F":
                n = 2 * (n // 2) + 1
            r = rng.uniform(0.55, 1.9)
            th = rng.uniform(-math.pi + 0.15, math.pi - 0.15)
            t = r * cmath.exp(1j * th)
            exact = jones_family_closed(fam, n).eval(t)
            rec = reconstruct_eval(fam, n, t)
            assert abs(rec - exact) <= 1e-9 * max(1.0, abs(exact)), (fam, n, t)


def test_lambda_values_reject_origin():
    with pytest.raises(ValueError):
        lambda_values("A", 0)


def test_u_magnitude_regimes():
    rng = np.random.default_rng(3)
    for _ in range(12):
        th = rng.uniform(0, 2 * math.pi)
        outside = rng.uniform(1.1, 3.0) * cmath.exp(1j * th)
        inside = rng.uniform(0.2, 0.9) * cmath.exp(1j * th)
        assert abs(u_magnitude("A", outside) - 1.0) <= 1e-12
        assert abs(u_magnitude("A", inside) - 1 / abs(inside)) <= 1e-12
    on_circle = cmath.exp(0.7j)
    assert abs(u_magnitude("A", on_circle) - 1.0) <= 1e-12


# --- locus tracing -----------------------------------------------------------------


def _tie_quality(family, t):
    mods = sorted((abs(v) for v in lambda_values(family, t)), reverse=True)
    return (mods[0] - mods[1]) / mods[0]


def test_trace_locus_a_is_unit_circle():
    pts = trace_locus("A", resolution=300)
    assert len(pts) >= 250
    for p in pts:
        assert abs(abs(p.t) - 1.0) <= 1e-10
        assert p.tied_pair == (0, 1)


def test_trace_locus_b_arc_and_segment():
    pts = trace_locus("B", resolution=300)
    for p in pts:
        assert closed_form_locus_distance("B", p.t) <= 1e-9
    on_arc = [p for p in pts if abs(abs(p.t) - 1.0) <= 1e-10]
    on_segment = [p for p in pts if abs(p.t.imag) <= 1e-12 and p.t.real > 0.3]
    assert len(on_arc) >= 100
    assert len(on_segment) >= 50


def test_trace_locus_e_satisfies_polar_equation():
    pts = trace_locus("E", resolution=300)
    assert len(pts) >= 200
    for p in pts:
        r, th = abs(p.t), cmath.phase(p.t)
        residual = -1 + 1 / r**2 + 2 * r * math.cos(th) + 2 * math.cos(2 * th)
        assert abs(residual) <= 1e-8


def test_trace_locus_f_window_scan():
    pts = trace_locus("F", resolution=300)
    assert pts
    for p in pts:
        assert _tie_quality("F", p.t) <= 1e-7
    # both real-axis oval crossings show up
    assert min(abs(p.t - 0.6823278) for p in pts) <= 0.02
    assert min(abs(p.t - 1.7548777) for p in pts) <= 0.02


def test_traced_points_are_globally_dominant_ties():
    for fam in ("A", "B", "E"):
        for p in trace_locus(fam, resolution=150)[::7]:
            assert _tie_quality(fam, p.t) <= 1e-7


def test_trace_locus_validation():
    with pytest.raises(ValueError):
        trace_locus("A", resolution=50)
    with pytest.raises(ValueError):
        trace_locus("Q")


def test_mirror_locus_is_the_inversion_image():
    # tracing the t -> 1/t system yields exactly the inverted point set;
    # the polar ray grid is negation-symmetric, so inverted plain points
    # land back on scanned rays and both sets agree point for point
    plain = [p.t for p in trace_locus("E", resolution=400)]
    mirrored = [p.t for p in trace_locus("E", resolution=400, mirror=True)]
    inverted = [1 / t for t in plain]

    def clip(zs):
        # keep radii whose preimages under inversion stay inside the
        # scanned annulus on both sides
        return [z for z in zs if 0.2 <= abs(z) <= 4.0]

    a, b = clip(inverted), clip(mirrored)
    assert a and b

    def hausdorff(xs, ys):
        worst = 0.0
        for x in xs:
            best = min(abs(x - y) for y in ys)
            worst = max(worst, best)
        return worst

    assert hausdorff(a, b) <= 1e-4
    assert hausdorff(b, a) <= 1e-4


# --- landmarks -----------------------------------------------------------------------


def test_b_landmarks_hit_golden_ratio_points():
    lb = locus_landmarks("B")
    lo, hi = lb["segment"]
    assert abs(lo - (3 - math.sqrt(5)) / 2) <= 1e-8
    assert abs(hi - (3 + math.sqrt(5)) / 2) <= 1e-8
    assert abs(lb["arc_angle"] - 2 * math.pi / 3) <= 1e-8


def test_e_landmarks():
    le = locus_landmarks("E", r_far=50.0)
    assert abs(le["imag_crossing_r"] - 1 / math.sqrt(3)) <= 1e-8
    assert abs(le["far_cos_theta"] - 3 / 100.0) <= 2e-4


def test_f_landmarks_match_cubic_resolvents():
    # the two real crossings are roots of t^3 + t - 1 and t^3 - 2t^2 + t - 1
    lf = locus_landmarks("F")
    x1, x2 = lf["real_crossings"]
    r1 = next(z.real for z in np.roots([1, 0, 1, -1]) if abs(z.imag) < 1e-12)
    r2 = next(z.real for z in np.roots([1, -2, 1, -1]) if abs(z.imag) < 1e-12)
    assert abs(x1 - r1) <= 1e-9
    assert abs(x2 - r2) <= 1e-9


def test_a_landmark_radius():
    assert abs(locus_landmarks("A")["radius"] - 1.0) <= 1e-10


# --- region classification --------------------------------------------------------------


def test_region_classification_known_points():
    assert region_classify("A", 1.5 + 0.2j) == "R1"
    assert region_classify("A", 0.5) == "R2"
    assert region_classify("B", 5.0) == "R1"
    assert region_classify("E", 3.0) == "R1"
    assert region_classify("E", 0.3) == "R1"  # positive reals never cross the curve
    assert region_classify("E", 1j) == "R2"
    assert region_classify("F", 2.0) == "R1"
    assert region_classify("F", 0.9) == "R2"
    assert region_classify("F", -0.5 + 0.95j) == "R3"
    assert region_classify("F", -0.5 - 0.95j) == "R3*"
    assert region_classify("F", 0.5573 + 1.0495j) == "R4"
    assert region_classify("F", 0.5573 - 1.0495j) == "R4*"


def test_region_classify_rejects_points_on_the_curve():
    with pytest.raises(ValueError):
        region_classify("A", cmath.exp(0.3j))


def test_closed_form_distance():
    assert closed_form_locus_distance("B", cmath.exp(0.5j)) == 0.0
    assert closed_form_locus_distance("B", 1.7) == 0.0
    assert abs(closed_form_locus_distance("B", 3.0) - (3 - (3 + math.sqrt(5)) / 2)) <= 1e-12
    assert abs(closed_form_locus_distance("A", 1.3) - 0.3) <= 1e-12
    # beyond the arc opening angle, distance is to the nearest endpoint
    far = 1.001 * cmath.exp(1j * (2 * math.pi / 3 + 0.2))
    endpoint = cmath.exp(2j * math.pi / 3)
    assert closed_form_locus_distance("B", far) >= abs(far - endpoint) - 1e-9
