"""Reproduction check suites shared by the CLI and the acceptance tests.

``run_suite("paper")`` runs the full battery of cross-method identities,
reference-value comparisons, zero-distribution measurements, and locus
landmarks; ``run_suite("quick")`` runs a reduced-parameter subset meant to
finish in well under a minute.  Each check yields a CheckResult; callers
render the pass/fail table and decide the exit status.
"""

from __future__ import annotations

import cmath
import math
import random
from dataclasses import dataclass

from .graphs import (
    SignedMultigraph,
    build_graph,
    dual_pair,
    link_presentation,
)
from .jones import (
    jones_alternating,
    jones_family_closed,
    jones_nonalternating,
    skein_check,
    structural_report,
)
from .polynomials import QuarterLaurent
from .tutte import (
    chromatic_eval,
    potts_direct,
    potts_via_tutte,
    signed_tutte,
    tutte_bruteforce,
    tutte_dc,
    tutte_family_closed,
)
from .asymptotics import (
    closed_form_locus_distance,
    jones_zeros,
    locus_landmarks,
    reconstruct_eval,
    u_magnitude,
)

__all__ = ["CheckResult", "run_suite", "SUITES", "REFERENCE_JONES"]

SUITES = ("quick", "paper")

# Reference Jones polynomials for the first members of each family,
# tabulated independently (keys are quarter-exponents: e4 = 4 * exponent).
REFERENCE_JONES = {
    ("A", 3): {-16: -1, -12: 1, -4: 1},
    ("A", 4): {-8: 1, -4: -1, 0: 1, 4: -1, 8: 1},
    ("B", 3): {-8: 1, -4: -1, 0: 1, 4: -1, 8: 1},
    ("B", 5): {
        -16: 1, -12: -4, -8: 6, -4: -7, 0: 9,
        4: -7, 8: 6, 12: -4, 16: 1,
    },
    ("E", 2): {-18: -1, -10: -1, -6: 1, -2: -1},
    ("E", 3): {-28: 1, -24: -1, -20: 3, -16: -1, -12: 3, -8: -2, -4: 1},
    ("F", 5): {-16: 1, -12: -1, -8: 1, -4: -2, 0: 2, 4: -1, 8: 1},
    ("F", 7): {
        -24: 1, -20: -3, -16: 5, -12: -7, -8: 8,
        -4: -8, 0: 8, 4: -5, 8: 3, 12: -1,
    },
}

# graph kind backing each link family, with the member-to-kind index map
FAMILY_GRAPH = {
    "A": ("D1C", lambda n: n - 1),
    "B": ("Wheel", lambda n: n),
    "E": ("H3", lambda n: n),
    "F": ("HW", lambda n: n),
}


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


def _swap_vars(p):
    """T with x and y exchanged (planar-dual comparison)."""
    return type(p)({(j, i): c for (i, j), c in p.terms()})


def _family_members(max_n):
    for fam, lo in (("A", 3), ("B", 3), ("E", 2), ("F", 5)):
        for n in range(lo, max_n + 1):
            if fam == "F" and n % 2 == 0:
                continue
            yield fam, n


# --- criterion 1 ----------------------------------------------------------


def check_reference_jones(quick: bool):
    out = []
    for (fam, n), terms in sorted(REFERENCE_JONES.items()):
        expected = QuarterLaurent(terms)
        closed = jones_family_closed(fam, n)
        alt = jones_alternating(link_presentation(fam, n))
        ok = closed == expected and alt == expected
        out.append(
            CheckResult(
                f"1. reference Jones {fam}_{n} (closed and graph routes)",
                ok,
                "" if ok else f"closed={closed.pretty()} graph={alt.pretty()}",
            )
        )
    return out


# --- criterion 2 ----------------------------------------------------------


def check_tutte_three_way(quick: bool):
    edge_cap = 16 if quick else 24
    bounds = {"A": 24, "B": 12, "E": 12, "F": 17}
    out = []
    for fam in "ABEF":
        kind, idx = FAMILY_GRAPH[fam]
        worst = None
        count = 0
        lo = {"A": 3, "B": 3, "E": 2, "F": 5}[fam]
        for n in range(lo, bounds[fam] + 1):
            if fam == "F" and n % 2 == 0:
                continue
            g = build_graph(kind, idx(n))
            if len(g.edges) > edge_cap:
                continue
            brute = tutte_bruteforce(g)
            dc = tutte_dc(g)
            closed = tutte_family_closed(kind, idx(n))
            count += 1
            if not (brute == dc == closed):
                worst = n
                break
        out.append(
            CheckResult(
                f"2. Tutte brute/dc/closed agree, family {fam} "
                f"({count} members, <= {edge_cap} edges)",
                worst is None,
                "" if worst is None else f"first disagreement at n={worst}",
            )
        )
    return out


# --- criterion 3 ----------------------------------------------------------


def check_duality(quick: bool):
    cap = 6 if quick else 8
    out = []
    bad = []
    for n in range(3, cap + 1):
        c, fl = build_graph("C", n), build_graph("FL", n)
        if tutte_dc(c) != _swap_vars(tutte_dc(fl)):
            bad.append(f"C_{n}/FL_{n}")
    for n in range(2, cap + 1):
        h, dc_ = dual_pair("H3", n)
        if tutte_dc(h) != _swap_vars(tutte_dc(dc_)):
            bad.append(f"H3_{n}/DC_{n}")
    for n in range(3, cap + 1):
        w = build_graph("Wheel", n)
        t = tutte_dc(w)
        if t != _swap_vars(t):
            bad.append(f"Wheel_{n}")
    out.append(
        CheckResult(
            f"3. planar duality transposes Tutte (pairs and wheels, n <= {cap})",
            not bad,
            ", ".join(bad),
        )
    )
    return out


# --- criterion 4 ----------------------------------------------------------


def check_structural_laws(quick: bool):
    cap = 10 if quick else 20
    bad = []
    for fam, n in _family_members(cap):
        p = link_presentation(fam, n)
        v = jones_family_closed(fam, n)
        rep = structural_report(p, v)
        if not rep.all_ok:
            bad.append(f"{fam}_{n}")
    return [
        CheckResult(
            f"4. structural laws: span=r, top sign, residues, V(1), "
            f"V(e^(2pi i/3)) sign (n <= {cap})",
            not bad,
            ", ".join(bad) if bad else "special value uses (-1)^(n_c - 1)",
        )
    ]


# --- criterion 5 ----------------------------------------------------------


def _sample_t(rng):
    # 0.5 < |t| < 2, away from the negative real axis (half-power branch)
    r = rng.uniform(0.55, 1.95)
    theta = rng.uniform(-math.pi + 0.1, math.pi - 0.1)
    return r * cmath.exp(1j * theta)


def check_lambda_fidelity(quick: bool, rng):
    pts = 20 if quick else 100
    hi = 8 if quick else 12
    out = []
    for fam in "ABEF":
        worst = 0.0
        for _ in range(pts):
            if fam == "F":
                n = rng.choice([m for m in range(5, hi + 1) if m % 2])
            else:
                n = rng.randint(5, hi)
            t = _sample_t(rng)
            exact = jones_family_closed(fam, n).eval(t)
            rec = reconstruct_eval(fam, n, t)
            err = abs(rec - exact) / max(1.0, abs(exact))
            worst = max(worst, err)
        out.append(
            CheckResult(
                f"5. lambda reconstruction vs exact, family {fam} "
                f"({pts} random t)",
                worst <= 1e-9,
                f"worst rel err {worst:.2e}",
            )
        )
    return out


# --- criterion 6 ----------------------------------------------------------


def check_zero_accumulation(quick: bool):
    if quick:
        return []
    out = []
    zs = jones_zeros("A", 50)
    radial = max(abs(abs(z) - 1) for z in zs)
    out.append(
        CheckResult(
            "6. A_50: all 50 zeros within 0.05 of |t|=1",
            len(zs) == 50 and radial <= 0.05,
            f"max radial deviation {radial:.4f}",
        )
    )
    angs = sorted(cmath.phase(z) % (2 * math.pi) for z in zs)
    gaps = [b - a for a, b in zip(angs, angs[1:])]
    gaps.append(angs[0] + 2 * math.pi - angs[-1])
    nominal = 2 * math.pi / 50
    ratio = max(max(gaps) / nominal, nominal / min(gaps))
    out.append(
        CheckResult(
            "6. A_50: angular gaps within factor 2 of 2pi/50",
            ratio <= 2.0,
            f"worst gap ratio {ratio:.3f}",
        )
    )
    sp = cmath.exp(2j * math.pi / 3)
    d_pair = max(
        min(abs(z - sp) for z in zs),
        min(abs(z - sp.conjugate()) for z in zs),
    )
    out.append(
        CheckResult(
            "6. A_50: conjugate zero pair within 0.05 of e^(+-2pi i/3)",
            d_pair <= 0.05,
            f"distance {d_pair:.4f}",
        )
    )
    zb = jones_zeros("B", 42)
    db = max(closed_form_locus_distance("B", z) for z in zb)
    out.append(
        CheckResult(
            "6. B_42: all zeros within 0.1 of the closed-form set",
            db <= 0.1,
            f"max distance {db:.4f}",
        )
    )
    return out


# --- criterion 7 ----------------------------------------------------------


def check_landmarks(quick: bool):
    out = []
    lb = locus_landmarks("B")
    lo, hi = lb["segment"]
    golden_lo = (3 - math.sqrt(5)) / 2
    golden_hi = (3 + math.sqrt(5)) / 2
    ok = (
        abs(lo - golden_lo) <= 1e-6
        and abs(hi - golden_hi) <= 1e-6
        and abs(lb["arc_angle"] - 2 * math.pi / 3) <= 1e-6
    )
    out.append(
        CheckResult(
            "7. B locus: segment endpoints (3+-sqrt5)/2 and arc angle "
            "2pi/3 within 1e-6",
            ok,
            f"endpoints ({lo:.8f}, {hi:.8f}), angle {lb['arc_angle']:.8f}",
        )
    )
    le = locus_landmarks("E", r_far=50.0)
    ok1 = abs(le["imag_crossing_r"] - 1 / math.sqrt(3)) <= 1e-6
    ok2 = abs(le["far_cos_theta"] - 3 / (2 * 50.0)) <= 2e-4
    out.append(
        CheckResult(
            "7. E locus: imaginary-axis crossing 1/sqrt3 within 1e-6; "
            "cos(theta) ~ 3/(2r) at r=50 within 2e-4",
            ok1 and ok2,
            f"crossing {le['imag_crossing_r']:.8f}, "
            f"cos {le['far_cos_theta']:.6f}",
        )
    )
    lf = locus_landmarks("F")
    x1, x2 = lf["real_crossings"]
    ok = abs(x1 - 0.6823278) <= 1e-5 and abs(x2 - 1.754877) <= 1e-5
    out.append(
        CheckResult(
            "7. F locus: real-axis crossings 0.6823278 and 1.754877 "
            "within 1e-5",
            ok,
            f"crossings ({x1:.7f}, {x2:.7f})",
        )
    )
    return out


# --- criterion 8 ----------------------------------------------------------


def check_u_magnitude(quick: bool, rng):
    bad = []
    for _ in range(10):
        t = rng.uniform(1.05, 3.0) * cmath.exp(1j * rng.uniform(0, 2 * math.pi))
        if abs(u_magnitude("A", t) - 1.0) > 1e-9:
            bad.append(f"|t|>1 at {t:.3f}")
    for _ in range(10):
        t = rng.uniform(0.2, 0.95) * cmath.exp(1j * rng.uniform(0, 2 * math.pi))
        if abs(u_magnitude("A", t) - 1 / abs(t)) > 1e-9:
            bad.append(f"|t|<1 at {t:.3f}")
    return [
        CheckResult(
            "8. family A growth rate: |U|=1 outside, 1/|t| inside "
            "(10 samples each)",
            not bad,
            ", ".join(bad),
        )
    ]


# --- criterion 9 ----------------------------------------------------------


def _random_signed_graph(rng, max_edges=8):
    n = rng.randint(2, 5)
    edges = [(i, i + 1) for i in range(n - 1)]  # spanning path keeps it connected
    while len(edges) < rng.randint(n - 1, max_edges):
        u = rng.randrange(n)
        v = rng.randrange(n)
        edges.append((min(u, v), max(u, v)))
    signs = [rng.choice([1, -1]) for _ in edges]
    return SignedMultigraph(n, edges, signs)


def check_nonalternating(quick: bool, rng):
    out = []
    bad = []
    for kind, n in (("C", 3), ("C", 5), ("FL", 4), ("D1C", 3), ("Wheel", 3),
                    ("H3", 2), ("C", 8)):
        g = build_graph(kind, n)
        sg = SignedMultigraph(g.n, g.edges, [1] * g.edge_count)
        if tutte_bruteforce(g) != signed_tutte(sg):
            bad.append(f"{kind}_{n}")
    out.append(
        CheckResult(
            "9. all-positive signed Tutte equals ordinary Tutte",
            not bad,
            ", ".join(bad),
        )
    )
    trials = 10 if quick else 50
    failures = 0
    for _ in range(trials):
        sg = _random_signed_graph(rng)
        try:
            jones_nonalternating(sg, writhe=rng.randint(-5, 5))
        except Exception:
            failures += 1
    out.append(
        CheckResult(
            f"9. signed-graph Jones: both substitution routes agree "
            f"({trials} random signed graphs)",
            failures == 0,
            f"{failures} failures",
        )
    )
    bad = []
    for n in range(3, 11):
        p = link_presentation("A", n)
        g = p.graph
        sg = SignedMultigraph(g.n, g.edges, [1] * g.edge_count)
        if jones_nonalternating(sg, p.writhe) != jones_alternating(p):
            bad.append(f"A_{n}")
    out.append(
        CheckResult(
            "9. signed route with no negative edges reproduces the "
            "alternating formula (A members, n <= 10)",
            not bad,
            ", ".join(bad),
        )
    )
    unknot = QuarterLaurent.const(1)
    two_unlink = QuarterLaurent({2: -1, -2: -1})
    out.append(
        CheckResult(
            "9. skein identity on the unknot/unknot/two-unlink triple",
            skein_check(unknot, unknot, two_unlink),
            "",
        )
    )
    return out


# --- criterion 10 ---------------------------------------------------------


def check_potts_chromatic(quick: bool, rng):
    out = []
    cap = 4 if quick else 6
    pts = 10 if quick else 50
    worst = 0.0
    for fam, n in _family_members(cap):
        kind, idx = FAMILY_GRAPH[fam]
        g = build_graph(kind, idx(n))
        for _ in range(pts):
            q = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
            v = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
            if abs(v) < 1e-3:
                continue
            direct = potts_direct(g, q, v)
            via = potts_via_tutte(g, q, v)
            err = abs(direct - via) / max(1.0, abs(direct))
            worst = max(worst, err)
    out.append(
        CheckResult(
            f"10. Potts cluster sum vs Tutte route, {pts} random complex "
            f"(q,v) per member (n <= {cap})",
            worst <= 1e-9,
            f"worst rel err {worst:.2e}",
        )
    )

    def coloring_count(g, q):
        count = 0
        for assign in range(q ** g.n):
            colors = [(assign // q**i) % q for i in range(g.n)]
            if all(colors[u] != colors[v] for u, v in g.edges):
                count += 1
        return count

    vertex_cap = 6 if quick else 8
    bad = []
    seen = set()
    for fam, n in _family_members(12):
        kind, idx = FAMILY_GRAPH[fam]
        g = build_graph(kind, idx(n))
        if g.n > vertex_cap or (kind, idx(n)) in seen:
            continue
        seen.add((kind, idx(n)))
        for q in (2, 3, 4):
            if chromatic_eval(g, q) != coloring_count(g, q):
                bad.append(f"{kind}_{idx(n)} q={q}")
    out.append(
        CheckResult(
            f"10. chromatic polynomial vs coloring enumeration, q in 2..4 "
            f"(<= {vertex_cap} vertices)",
            not bad,
            ", ".join(bad),
        )
    )
    bad = []
    for n in range(3, 9):
        g = build_graph("C", n)
        for q in range(0, 10):
            expected = (q - 1) ** n + (-1) ** n * (q - 1)
            if chromatic_eval(g, q) != expected:
                bad.append(f"C_{n} q={q}")
                break
    out.append(
        CheckResult(
            "10. chromatic closed form for circuits, n <= 8",
            not bad,
            ", ".join(bad),
        )
    )
    return out


# ---------------------------------------------------------------------------


def run_suite(suite: str, seed: int = 0):
    """Run a named check suite; returns the list of CheckResults."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {SUITES}")
    quick = suite == "quick"
    rng = random.Random(seed)
    results = []
    results += check_reference_jones(quick)
    results += check_tutte_three_way(quick)
    results += check_duality(quick)
    results += check_structural_laws(quick)
    results += check_lambda_fidelity(quick, rng)
    results += check_zero_accumulation(quick)
    results += check_landmarks(quick)
    results += check_u_magnitude(quick, rng)
    results += check_nonalternating(quick, rng)
    results += check_potts_chromatic(quick, rng)
    return results
