"""Dominant-term systems, Jones zeros, and equimodular accumulation curves.

Each link family's Jones polynomial decomposes as a monomial prefactor times
``sum_j c_j(t) * lambda_j(t)^m`` with m growing linearly in the member index.
As the index grows, zeros accumulate where the two largest ``|lambda_j|``
tie: the equimodular locus.  This module provides

* :func:`lambda_system` / :func:`reconstruct_eval` -- the closed lambda and
  coefficient forms per family, and the finite-n reconstruction they imply;
* :func:`find_roots` / :func:`jones_zeros` -- simultaneous (Aberth-Ehrlich)
  root finding for the exact polynomial parts;
* :func:`trace_locus` / :func:`locus_landmarks` -- numerical tracing of the
  equimodular curves by ray or grid scans with bisection refinement;
* :func:`u_magnitude` / :func:`region_classify` -- the growth-rate modulus
  and the dominance-pattern region labels.

Lambda indices are 0-based everywhere: index 0 is the first term of the
family's decomposition.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence

import numpy as np

from .jones import jones_family_closed

__all__ = [
    "LambdaSystem",
    "lambda_system",
    "lambda_values",
    "reconstruct_eval",
    "RootFindingError",
    "find_roots",
    "jones_zeros",
    "LocusPoint",
    "trace_locus",
    "locus_landmarks",
    "u_magnitude",
    "region_classify",
    "closed_form_locus_distance",
    "SPECIAL_ACCUMULATION_POINTS",
    "FAMILIES",
]

FAMILIES = ("A", "B", "E", "F")

# discrete accumulation points shared by the families (annotated, not traced)
SPECIAL_ACCUMULATION_POINTS = (
    cmath.exp(2j * cmath.pi / 3),
    cmath.exp(-2j * cmath.pi / 3),
)


class RootFindingError(ArithmeticError):
    """Root iteration failed to converge or left residuals too large."""


# ---------------------------------------------------------------------------
# lambda systems


@dataclass(frozen=True)
class LambdaSystem:
    """Closed-form decomposition data for one family.

    ``lambdas`` and ``coeffs`` are parallel tuples of complex evaluators;
    ``prefactor(t, n)`` the n-dependent monomial in front of the sum;
    ``exponent_of(n)`` the power the lambdas are raised to; ``u_power`` the
    rational p with |U| = max_j |lambda_j|^p.
    """

    family: str
    term_count: int
    lambdas: tuple
    coeffs: tuple
    prefactor: Callable
    exponent_of: Callable
    u_power: Fraction


def _b_pair(t: complex) -> tuple:
    """The quadratic eigenvalue pair for family B, modulus-descending."""
    s = 1 - t - 1 / t
    d = cmath.sqrt(s * s - 4)
    lp, lm = (s + d) / 2, (s - d) / 2
    if abs(lp) >= abs(lm):
        return lp, lm
    return lm, lp


_SYSTEMS = {}


def lambda_system(family: str) -> LambdaSystem:
    """The LambdaSystem for family A, B, E, or F."""
    if family in _SYSTEMS:
        return _SYSTEMS[family]
    if family == "A":
        sys = LambdaSystem(
            family="A",
            term_count=2,
            lambdas=(lambda t: 1 + 0j, lambda t: -1 / t),
            coeffs=(
                lambda t: (1 + t**-2) / (1 + t),
                lambda t: (1 - 1 / t) * (1 + t + 1 / t) / (1 + t),
            ),
            prefactor=lambda t, n: 1 + 0j if n % 2 else t**3,
            exponent_of=lambda n: n - 1,
            u_power=Fraction(1),
        )
    elif family == "B":
        sys = LambdaSystem(
            family="B",
            term_count=3,
            lambdas=(
                lambda t: 1 + 0j,
                lambda t: _b_pair(t)[0],
                lambda t: _b_pair(t)[1],
            ),
            coeffs=(lambda t: t + 1 / t, lambda t: 1 + 0j, lambda t: 1 + 0j),
            prefactor=lambda t, n: 1 + 0j,
            exponent_of=lambda n: n - 1,
            u_power=Fraction(1),
        )
    elif family == "E":
        sqrt = cmath.sqrt
        sys = LambdaSystem(
            family="E",
            term_count=2,
            lambdas=(
                lambda t: (1 - t) / (t * sqrt(t)),
                lambda t: -(1 + t**-2) / sqrt(t),
            ),
            coeffs=(
                lambda t: -sqrt(t) * (1 + t + 1 / t) / (1 + t),
                lambda t: -sqrt(t) / (1 + t),
            ),
            prefactor=lambda t, n: 1 + 0j,
            exponent_of=lambda n: n,
            u_power=Fraction(1),
        )
    elif family == "F":
        sys = LambdaSystem(
            family="F",
            term_count=3,
            lambdas=(
                lambda t: 1 + 0j,
                lambda t: 1 - 1 / t,
                lambda t: t**-2 - 1 / t + 1 - t,
            ),
            coeffs=(lambda t: 1 + 0j, lambda t: t + 1 / t, lambda t: 1 + 0j),
            prefactor=lambda t, n: 1 + 0j,
            exponent_of=lambda n: (n - 1) // 2,
            u_power=Fraction(1, 2),
        )
    else:
        raise ValueError(f"unknown family {family!r}")
    _SYSTEMS[family] = sys
    return sys


def lambda_values(family: str, t: complex) -> list:
    """All lambda_j(t) as a list (B's quadratic pair modulus-descending)."""
    if t == 0:
        raise ValueError("lambda evaluators are singular at t = 0")
    sys = lambda_system(family)
    return [f(complex(t)) for f in sys.lambdas]


def reconstruct_eval(family: str, n: int, t: complex) -> complex:
    """V reconstructed from the lambda decomposition at finite n.

    prefactor(t, n) * sum_j c_j(t) lambda_j(t)^exponent_of(n); must match
    the exact polynomial evaluation to 1e-9 relative error away from the
    excluded points (t = 0; t = -1 where the A/E coefficients have a pole).
    """
    t = complex(t)
    if t == 0:
        raise ValueError("t = 0 is excluded")
    sys = lambda_system(family)
    e = sys.exponent_of(n)
    total = 0j
    for lam, c in zip(sys.lambdas, sys.coeffs):
        total += c(t) * lam(t) ** e
    return sys.prefactor(t, n) * total


def u_magnitude(family: str, t: complex) -> float:
    """|U| at t: the dominant |lambda| raised to the family's u_power."""
    sys = lambda_system(family)
    top = max(abs(v) for v in lambda_values(family, t))
    return float(top ** float(sys.u_power))


# ---------------------------------------------------------------------------
# root finding


def _horner_np(coeffs: np.ndarray, z: np.ndarray) -> np.ndarray:
    p = np.zeros_like(z)
    for a in coeffs[::-1]:
        p = p * z + a
    return p


def _newton_polygon(points):
    """Upper convex hull of (exponent, log|coeff|) pairs, left to right."""
    hull = []
    for p in points:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            if (x2 - x1) * (p[1] - y1) >= (p[0] - x1) * (y2 - y1):
                hull.pop()
            else:
                break
        hull.append(p)
    return hull


def _aberth_double(a: np.ndarray, max_sweeps: int) -> np.ndarray:
    """Vectorized double-precision Aberth sweep from a root-bound circle."""
    deg = len(a) - 1
    lead = abs(a[-1])
    cauchy = 1.0 + max(abs(a[:-1])) / lead
    fujiwara = 2.0 * max(
        (abs(a[deg - k]) / lead) ** (1.0 / k) for k in range(1, deg + 1)
    )
    radius = min(cauchy, fujiwara)
    angles = 2 * np.pi * (np.arange(deg) + 0.354) / deg + 0.5 / deg
    z = radius * np.exp(1j * angles)
    da = a[1:] * np.arange(1, deg + 1)
    for sweep in range(max_sweeps):
        p = _horner_np(a, z)
        dp = _horner_np(da, z)
        bad = dp == 0
        if bad.any():
            z = np.where(bad, z * (1 + 1e-8) + 1e-8, z)
            continue
        newton = p / dp
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, np.inf)
        if (np.abs(diff) < 1e-300).any():
            bump = np.exp(2.399j * np.arange(deg))
            z = z + 1e-10 * (1 + np.abs(z)) * bump
            continue
        s = (1.0 / diff).sum(axis=1)
        w = newton / (1 - newton * s)
        z = z - w
        if np.max(np.abs(w) / (1 + np.abs(z))) < 1e-12:
            break
    return z


def _aberth_mp(coeffs, mpmath, max_sweeps: int):
    """High-precision Aberth pass seeded on Newton-polygon annuli.

    Needed when the coefficient range makes double-precision evaluation
    collapse into cancellation noise near the outer roots.
    """
    deg = len(coeffs) - 1
    a = [mpmath.mpmathify(c) for c in coeffs]
    da = [k * a[k] for k in range(1, deg + 1)]
    hull = _newton_polygon(
        [(i, mpmath.log(abs(c))) for i, c in enumerate(a) if c != 0]
    )
    z = []
    for (i1, y1), (i2, y2) in zip(hull, hull[1:]):
        m = i2 - i1
        r = mpmath.exp((y1 - y2) / m)
        for j in range(m):
            theta = 2 * mpmath.pi * (j + mpmath.mpf("0.368")) / m
            theta += mpmath.mpf("0.754") * len(z) / deg
            z.append(r * mpmath.mpc(mpmath.cos(theta), mpmath.sin(theta)))

    def horner(cs, x):
        acc = mpmath.mpc(0)
        for c in reversed(cs):
            acc = acc * x + c
        return acc

    stop = mpmath.mpf("1e-20")
    for sweep in range(max_sweeps):
        pvals = [horner(a, zi) for zi in z]
        dpvals = [horner(da, zi) for zi in z]
        maxrel = mpmath.mpf(0)
        new = list(z)
        for i in range(deg):
            if dpvals[i] == 0:
                new[i] = z[i] * (1 + stop) + stop
                maxrel = max(maxrel, mpmath.mpf(1))
                continue
            nwt = pvals[i] / dpvals[i]
            s = mpmath.mpc(0)
            collided = False
            for j in range(deg):
                if j == i:
                    continue
                d = z[i] - z[j]
                if d == 0:
                    collided = True
                    break
                s += 1 / d
            if collided:
                new[i] = z[i] + mpmath.mpf("0.01") * (1 + abs(z[i]))
                maxrel = max(maxrel, mpmath.mpf(1))
                continue
            den = 1 - nwt * s
            w = nwt / den if den != 0 else nwt
            new[i] = z[i] - w
            maxrel = max(maxrel, abs(w) / (1 + abs(new[i])))
        z = new
        if maxrel < stop:
            break
    return z


def _escalated_dps(coeffs) -> int:
    """Working precision that keeps evaluation meaningful near the roots."""
    deg = len(coeffs) - 1
    logs = [
        (i, math.log10(abs(c))) for i, c in enumerate(coeffs) if c != 0
    ]
    hull = _newton_polygon(logs)
    r_out = 1.0
    for (i1, y1), (i2, y2) in zip(hull, hull[1:]):
        r_out = max(r_out, 10 ** ((y1 - y2) / (i2 - i1)))
    log_r = math.log10(2 * r_out)
    scale_log = max(y for _, y in logs)
    lost = max(y + i * log_r for i, y in logs) - scale_log
    return int(40 + max(0.0, lost))


def _polish_certify(coeffs, approx, mpmath, dps, tol):
    """Newton-polish each root at high precision and enforce the residual
    bound; raises RootFindingError when a residual stays out of range."""
    with mpmath.workdps(dps):
        a = [mpmath.mpmathify(c) for c in coeffs]
        da = [k * a[k] for k in range(1, len(a))]

        def horner(cs, x):
            acc = mpmath.mpc(0)
            for c in reversed(cs):
                acc = acc * x + c
            return acc

        out = []
        polished = []
        for zi in approx:
            x = mpmath.mpc(zi)
            for _ in range(8):
                px = horner(a, x)
                if px == 0:
                    break
                dpx = horner(da, x)
                if dpx == 0:
                    break
                step = px / dpx
                x = x - step
                if abs(step) <= mpmath.mpf("1e-30") * (1 + abs(x)):
                    break
            resid = abs(horner(a, x))
            if not resid <= tol:
                raise RootFindingError(
                    f"residual {float(resid):.3e} exceeds {float(tol):.3e} "
                    f"near root {complex(x):.6g}"
                )
            polished.append(x)
            out.append(complex(x))
        # Vieta completeness: individually tiny residuals cannot detect two
        # iterates polishing onto the same root, so compare symmetric data
        deg = len(a) - 1
        root_sum = sum(polished, mpmath.mpc(0))
        vieta_sum = -a[-2] / a[-1]
        sum_scale = max(mpmath.mpf(1), sum(abs(x) for x in polished))
        if not abs(root_sum - vieta_sum) <= mpmath.mpf("1e-6") * sum_scale:
            raise RootFindingError("root multiset fails the sum identity")
        log_prod = sum(mpmath.log(abs(x)) for x in polished)
        vieta_prod = mpmath.log(abs(a[0] / a[-1]))
        if not abs(log_prod - vieta_prod) <= mpmath.mpf("1e-6") * max(1, deg):
            raise RootFindingError("root multiset fails the product identity")
    return out


def find_roots(coeffs: Sequence, max_sweeps: int = 500):
    """All complex roots of sum_i coeffs[i] t^i via Aberth-Ehrlich iteration.

    A double-precision pass runs first: starting points equispaced on a
    circle at the smaller of the Cauchy and Fujiwara root bounds (the raw
    Cauchy radius alone reaches 1e15 for the larger family polynomials),
    simultaneous third-order sweeps, update tolerance 1e-12, at most
    ``max_sweeps`` sweeps, then a Newton polish.  Each root must certify
    with residual |p(root)| <= 1e-8 times the largest coefficient
    magnitude.  When certification fails - the family polynomials develop
    coefficient ranges beyond what double evaluation can cancel - the
    same iteration reruns in high-precision arithmetic seeded on
    Newton-polygon annuli before certifying again.

    Raises RootFindingError if the certified residual bound cannot be met.
    """
    if len(coeffs) < 2:
        raise ValueError("degree must be at least 1")
    if coeffs[0] == 0 or coeffs[-1] == 0:
        raise ValueError("leading and constant coefficients must be nonzero")
    import mpmath

    scale = max(abs(c) for c in coeffs)
    tol = mpmath.mpf("1e-8") * mpmath.mpmathify(scale if scale else 1)
    deg = len(coeffs) - 1
    if deg == 1:
        root = mpmath.mpf(-1) * mpmath.mpmathify(coeffs[0]) / mpmath.mpmathify(
            coeffs[1]
        )
        return [complex(root)]

    a = np.array([complex(c) for c in coeffs], dtype=complex) / float(scale)
    approx = _aberth_double(a, max_sweeps)
    try:
        out = _polish_certify(coeffs, [complex(zi) for zi in approx], mpmath, 40, tol)
    except RootFindingError:
        dps = _escalated_dps(coeffs)
        with mpmath.workdps(dps):
            approx_mp = _aberth_mp(coeffs, mpmath, max_sweeps)
        out = _polish_certify(coeffs, approx_mp, mpmath, dps, tol)
    return out


def _angle_key(z: complex) -> tuple:
    return (cmath.phase(z) % (2 * math.pi), abs(z))


def jones_zeros(family: str, n: int) -> list:
    """Zeros of V for member n: strip the monomial, solve the exact part.

    Output is sorted by angle (then radius); the count equals the crossing
    number of the member.
    """
    v = jones_family_closed(family, n)
    _, coeffs = v.strip_monomial()
    roots = find_roots(coeffs)
    return sorted(roots, key=_angle_key)


# ---------------------------------------------------------------------------
# locus tracing


@dataclass(frozen=True)
class LocusPoint:
    """A traced equimodular point: the two lambda indices tie in modulus
    there and jointly dominate all other terms."""

    t: complex
    tied_pair: tuple


_DEFAULT_RMAX = {"A": 4.0, "B": 4.0, "E": 8.0}


def _lambda_rows(family: str, ts: np.ndarray, invert: bool = False) -> np.ndarray:
    """Vectorized lambda values, one row per term.

    For family B the quadratic pair is continuity-tracked along the input
    array (which must sample a continuous path) so each row is a smooth
    branch rather than the raw principal-root pair.  ``invert`` evaluates
    the mirrored system (lambdas composed with t -> 1/t).
    """
    if invert:
        ts = 1 / ts
    if family == "A":
        return np.vstack([np.ones_like(ts), -1 / ts])
    if family == "B":
        s = 1 - ts - 1 / ts
        d = np.sqrt(s * s - 4)
        lp, lm = (s + d) / 2, (s - d) / 2
        # swap entries wherever continuing the previous sample prefers it
        d_keep = np.abs(lp[1:] - lp[:-1]) + np.abs(lm[1:] - lm[:-1])
        d_swap = np.abs(lp[1:] - lm[:-1]) + np.abs(lm[1:] - lp[:-1])
        flip = np.logical_xor.accumulate(d_swap < d_keep)
        flip = np.concatenate([[False], flip])
        a = np.where(flip, lm, lp)
        b = np.where(flip, lp, lm)
        return np.vstack([np.ones_like(ts), a, b])
    if family == "E":
        rt = np.sqrt(ts)
        return np.vstack([(1 - ts) / (ts * rt), -(1 + ts**-2) / rt])
    if family == "F":
        u = 1 / ts
        return np.vstack([np.ones_like(ts), 1 - u, u * u - u + 1 - ts])
    raise ValueError(f"unknown family {family!r}")


def _scalar_tracked(family: str, t: complex, ref: Optional[tuple], invert: bool = False):
    """Scalar lambda values with B's pair aligned to a reference pair."""
    vals = lambda_values(family, 1 / t if invert else t)
    if family == "B" and ref is not None:
        a, b = vals[1], vals[2]
        ra, rb = ref
        if abs(a - ra) + abs(b - rb) > abs(a - rb) + abs(b - ra):
            a, b = b, a
        vals = [vals[0], a, b]
    return vals


def _dominance_filtered(family: str, t: complex, j: int, k: int, invert: bool = False):
    """LocusPoint if the (j, k) tie holds and dominates; else None."""
    vals = lambda_values(family, 1 / t if invert else t)
    mods = [abs(v) for v in vals]
    top = max(mods)
    if top == 0:
        return None
    if abs(mods[j] - mods[k]) > 1e-10 * top:
        return None
    if mods[j] < top * (1 - 1e-8) or mods[k] < top * (1 - 1e-8):
        return None
    return LocusPoint(t=t, tied_pair=(j, k))


def _bisect_tie(family, make_t, s_lo, s_hi, j, k, ref_lo, invert=False):
    """Shrink [s_lo, s_hi] over a sign change of log|l_j| - log|l_k|."""

    def g_of(vals):
        mj, mk = abs(vals[j]), abs(vals[k])
        if mj == 0 or mk == 0:
            return math.inf if mk == 0 else -math.inf
        return math.log(mj) - math.log(mk)

    vals_lo = _scalar_tracked(family, make_t(s_lo), ref_lo, invert)
    g_lo = g_of(vals_lo)
    ref = (vals_lo[1], vals_lo[2]) if family == "B" else None
    for _ in range(80):
        mid = 0.5 * (s_lo + s_hi)
        if s_hi - s_lo <= 1e-14 * max(1.0, abs(mid)):
            break
        if make_t(mid) == 0:
            mid += 0.25 * (s_hi - s_lo)
        vals_mid = _scalar_tracked(family, make_t(mid), ref, invert)
        g_mid = g_of(vals_mid)
        if g_mid == 0:
            return mid
        if (g_mid > 0) == (g_lo > 0):
            s_lo = mid
            g_lo = g_mid
            if family == "B":
                ref = (vals_mid[1], vals_mid[2])
        else:
            s_hi = mid
    return 0.5 * (s_lo + s_hi)


def _pairs(count: int):
    return [(j, k) for j in range(count) for k in range(j + 1, count)]


def _scan_path(family, ts: np.ndarray, make_t, svals: np.ndarray, out: list,
               invert: bool = False):
    """Find tie points along one continuous path of samples."""
    with np.errstate(divide="ignore", invalid="ignore"):
        rows = _lambda_rows(family, ts, invert)
        mods = np.abs(rows)
        logs = np.log(mods)
    npts = ts.shape[0]
    found = []
    for j, k in _pairs(rows.shape[0]):
        g = logs[j] - logs[k]
        finite = np.isfinite(g)
        # exact ties sitting on the scan path (e.g. the B real segment)
        on_path = np.where(finite & (np.abs(g) < 1e-13))[0]
        for i in on_path:
            found.append((float(svals[i]), j, k))
        sgn = np.sign(g)
        flips = np.where(
            finite[:-1]
            & finite[1:]
            & (sgn[:-1] * sgn[1:] < 0)
        )[0]
        for i in flips:
            ref = (rows[1][i], rows[2][i]) if family == "B" else None
            s_star = _bisect_tie(
                family, make_t, float(svals[i]), float(svals[i + 1]), j, k, ref,
                invert,
            )
            found.append((s_star, j, k))
    # deduplicate ties found by several pairs at the same point
    found.sort()
    emitted = []
    for s_star, j, k in found:
        if emitted and abs(s_star - emitted[-1]) <= 1e-9 * (1 + abs(s_star)):
            continue
        pt = _dominance_filtered(family, make_t(s_star), j, k, invert)
        if pt is not None:
            emitted.append(s_star)
            out.append(pt)


def trace_locus(
    family: str, window=None, resolution: int = 2000, mirror: bool = False
) -> list:
    """Trace the equimodular accumulation curve.

    Families A, B, E scan ``resolution`` polar rays out to an ``r_max``
    window (defaults 4, 4, 8); family F scans vertical grid columns over a
    rectangle (default [-2, 2] x [-2, 2]).  Along each path, sign changes
    of log|lambda_j| - log|lambda_k| are bisected to machine width for
    every term pair, exact on-path ties are collected directly, and only
    points whose tied pair dominates all terms are kept.  Output is sorted
    by angle, then radius.

    ``mirror`` traces the mirrored system instead (every lambda composed
    with t -> 1/t), whose curve is the inversion image of the plain one.
    """
    if resolution < 100:
        raise ValueError("resolution must be at least 100")
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    out: list = []
    if family in ("A", "B", "E"):
        rmax = float(window) if window is not None else _DEFAULT_RMAX[family]
        if rmax <= 0:
            raise ValueError("r_max must be positive")
        rs = np.linspace(rmax / resolution, rmax, resolution)
        for i in range(resolution):
            theta = 2 * math.pi * i / resolution
            rot = cmath.exp(1j * theta)
            ts = rs * rot
            _scan_path(family, ts, lambda r, rot=rot: r * rot, rs, out, mirror)
    else:
        if window is None:
            xmin, xmax, ymin, ymax = -2.0, 2.0, -2.0, 2.0
        else:
            xmin, xmax, ymin, ymax = map(float, window)
        xs = np.linspace(xmin, xmax, resolution)
        ys = np.linspace(ymin, ymax, resolution)
        # scan both directions: columns miss near-vertical curve segments
        # (e.g. the oval's real-axis crossings) that rows catch, and vice versa
        for x in xs:
            ts = x + 1j * ys
            _scan_path(family, ts, lambda y, x=x: complex(x, y), ys, out, mirror)
        for y in ys:
            ts = xs + 1j * y
            _scan_path(family, ts, lambda x, y=y: complex(x, y), xs, out, mirror)
    out.sort(key=lambda p: _angle_key(p.t))
    return out


# ---------------------------------------------------------------------------
# landmarks on the closed-form loci


def _tie_gap(family: str, t: complex, j: int, k: int) -> float:
    mods = [abs(v) for v in lambda_values(family, t)]
    if mods[j] == 0 or mods[k] == 0:
        return math.inf
    return math.log(mods[j]) - math.log(mods[k])


def _bisect_predicate(pred, lo, hi, iters=100):
    """pred(lo) is True, pred(hi) False; return the boundary."""
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        if hi - lo <= 1e-15 * max(1.0, abs(mid)):
            break
        if pred(mid):
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def locus_landmarks(family: str, r_far: float = 50.0) -> dict:
    """Refined reference points on each family's accumulation curve.

    A: the circle radius on an arbitrary ray.
    B: real-segment endpoints and the positive arc-endpoint angle.
    E: imaginary-axis crossing radius and cos(theta) on the circle r_far.
    F: the two real-axis crossings of the right oval.
    """
    if family == "A":
        direction = cmath.exp(0.357j)

        def g(r):
            return _tie_gap("A", r * direction, 0, 1)

        r = _bisect_scalar(g, 0.5, 2.0)
        return {"radius": r}
    if family == "B":

        def tie_real(x):
            vals = lambda_values("B", complex(x, 0.0))
            return abs(abs(vals[1]) - abs(vals[2])) <= 1e-12 * abs(vals[1])

        # segment endpoints: ties hold inside, fail outside
        assert tie_real(1.0) and not tie_real(0.05) and not tie_real(3.9)
        left = _bisect_predicate(lambda x: not tie_real(x), 0.05, 1.0)
        right = _bisect_predicate(tie_real, 1.0, 3.9)

        def tie_arc(theta):
            vals = lambda_values("B", cmath.exp(1j * theta))
            return abs(abs(vals[1]) - abs(vals[2])) <= 1e-12 * abs(vals[1])

        assert tie_arc(1.0) and not tie_arc(3.0)
        angle = _bisect_predicate(tie_arc, 1.0, 3.0)
        return {"segment": (left, right), "arc_angle": angle}
    if family == "E":

        def g_imag(r):
            return _tie_gap("E", complex(0.0, r), 0, 1)

        r_cross = _bisect_scalar(g_imag, 0.2, 2.0)

        def g_far(theta):
            return _tie_gap("E", r_far * cmath.exp(1j * theta), 0, 1)

        theta_far = _bisect_scalar(g_far, 1.2, math.pi / 2)
        return {
            "imag_crossing_r": r_cross,
            "far_radius": r_far,
            "far_cos_theta": math.cos(theta_far),
        }
    if family == "F":

        def g_real(x):
            return _tie_gap("F", complex(x, 0.0), 0, 2)

        x1 = _bisect_scalar(g_real, 0.4, 1.0)
        x2 = _bisect_scalar(g_real, 1.2, 2.2)
        return {"real_crossings": (x1, x2)}
    raise ValueError(f"unknown family {family!r}")


def _bisect_scalar(g, lo, hi, iters=100):
    g_lo = g(lo)
    g_hi = g(hi)
    if g_lo == 0:
        return lo
    if g_hi == 0:
        return hi
    if (g_lo > 0) == (g_hi > 0):
        raise RuntimeError("no sign change in bracket")
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        if hi - lo <= 1e-15 * max(1.0, abs(mid)):
            break
        g_mid = g(mid)
        if g_mid == 0:
            return mid
        if (g_mid > 0) == (g_lo > 0):
            lo, g_lo = mid, g_mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


# ---------------------------------------------------------------------------
# regions and distances


def region_classify(family: str, t: complex) -> str:
    """Label of the dominance region containing t.

    Raises ValueError when t lies on the accumulation curve (top two
    moduli within 1e-8 relatively), where no region is defined.
    """
    t = complex(t)
    mods = [abs(v) for v in lambda_values(family, t)]
    order = sorted(range(len(mods)), key=lambda i: -mods[i])
    top, second = order[0], order[1] if len(order) > 1 else order[0]
    if mods[second] >= mods[top] * (1 - 1e-8):
        raise ValueError(f"t = {t:.6g} lies on the accumulation set")
    if family == "A":
        return "R1" if top == 0 else "R2"
    if family == "B":
        return "R1"
    if family == "E":
        return "R1" if top == 1 else "R2"
    if family == "F":
        if top == 2:
            return "R1"
        if top == 1:
            return "R3" if t.imag >= 0 else "R3*"
        # lambda_1-dominance splits into the right-oval interior (confined
        # to |Im t| < 0.759) and the two bubbles (|Im t| in [0.866, 1.323]);
        # the band between is free of lambda_1 dominance
        if abs(t.imag) <= 0.8:
            return "R2"
        return "R4" if t.imag > 0 else "R4*"
    raise ValueError(f"unknown family {family!r}")


def closed_form_locus_distance(family: str, t: complex) -> float:
    """Distance from t to the closed-form accumulation set (A and B only).

    A: the unit circle.  B: the unit-circle arc |angle| <= 2 pi/3 together
    with the real segment [(3 - sqrt 5)/2, (3 + sqrt 5)/2].
    """
    t = complex(t)
    if family == "A":
        return abs(abs(t) - 1.0)
    if family == "B":
        theta = abs(cmath.phase(t))
        if theta <= 2 * math.pi / 3:
            d_arc = abs(abs(t) - 1.0)
        else:
            d_arc = min(
                abs(t - SPECIAL_ACCUMULATION_POINTS[0]),
                abs(t - SPECIAL_ACCUMULATION_POINTS[1]),
            )
        a = (3 - math.sqrt(5)) / 2
        b = (3 + math.sqrt(5)) / 2
        x = min(max(t.real, a), b)
        d_seg = abs(t - x)
        return min(d_arc, d_seg)
    raise ValueError(f"no closed-form locus registered for family {family!r}")
