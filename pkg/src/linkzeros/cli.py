"""Command-line interface for the link-family engine.

Subcommands: family-info, tutte, jones, zeros, locus, potts, chromatic,
verify.  Exit codes: 0 success, 2 usage or input error, 3 mathematical
check failure, 4 numerical non-convergence.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .graphs import (
    GRAPH_KINDS,
    Multigraph,
    SignedMultigraph,
    build_graph,
    link_presentation,
)
from .jones import (
    ConsistencyError,
    jones_alternating,
    jones_family_closed,
    jones_nonalternating,
    structural_report,
)
from .polynomials import QuarterLaurent
from .tutte import (
    BRUTE_FORCE_EDGE_LIMIT,
    chromatic,
    potts_direct,
    potts_via_tutte,
    tutte_bruteforce,
    tutte_dc,
    tutte_family_closed,
)
from .asymptotics import (
    FAMILIES,
    RootFindingError,
    jones_zeros,
    trace_locus,
)
from .verify import SUITES, run_suite

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_MATH = 3
EXIT_NOCONV = 4


def _fail(msg: str, code: int) -> int:
    print(msg, file=sys.stderr)
    return code


def _emit_json(obj) -> None:
    json.dump(obj, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _poly_obj(p):
    """Embed a polynomial's canonical JSON form inside a larger document."""
    return json.loads(p.to_json())


def _parse_scalar(text: str):
    """Exact where possible: int, then Fraction ('3/4', '0.25'), then complex."""
    try:
        return int(text)
    except ValueError:
        pass
    try:
        return Fraction(text)
    except ValueError:
        pass
    try:
        return complex(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")


def _num_json(x):
    if isinstance(x, bool) or isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else str(x)
    if isinstance(x, complex):
        if x.imag == 0:
            return x.real
        return {"re": x.real, "im": x.imag}
    return x


def _load_graph(path: str) -> Multigraph:
    with open(path, "r", encoding="utf-8") as fh:
        return Multigraph.from_json(fh.read())


def _load_signed_graph(path: str) -> SignedMultigraph:
    with open(path, "r", encoding="utf-8") as fh:
        return SignedMultigraph.from_json(fh.read())


def _write_text(path, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


# --- SVG -------------------------------------------------------------------


def _svg_scatter(points, path: str, unit_circle: bool = False) -> None:
    """Self-contained scatter SVG: inline styling, no scripts, 5% margin."""
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    if unit_circle or not points:
        xs += [-1.0, 1.0]
        ys += [-1.0, 1.0]
    xmin, xmax = min(xs), max(xs)
    ymin, ymax = min(ys), max(ys)
    side = max(xmax - xmin, ymax - ymin, 1e-9)
    pad = 0.05 * side
    xmin, xmax = xmin - pad, xmax + pad
    ymin, ymax = ymin - pad, ymax + pad
    w, h = xmax - xmin, ymax - ymin
    # SVG y grows downward, so plot (x, -y) in a flipped viewBox
    vb = f"{xmin:.6g} {-ymax:.6g} {w:.6g} {h:.6g}"
    r = 0.006 * max(w, h)
    sw = 0.003 * max(w, h)
    parts = [
        '<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="{vb}" width="640" height="{640 * h / w:.0f}">',
        f'<rect x="{xmin:.6g}" y="{-ymax:.6g}" width="{w:.6g}" '
        f'height="{h:.6g}" fill="white"/>',
    ]
    if xmin < 0 < xmax:
        parts.append(
            f'<line x1="0" y1="{-ymax:.6g}" x2="0" y2="{-ymin:.6g}" '
            f'stroke="#cccccc" stroke-width="{sw:.6g}"/>'
        )
    if ymin < 0 < ymax:
        parts.append(
            f'<line x1="{xmin:.6g}" y1="0" x2="{xmax:.6g}" y2="0" '
            f'stroke="#cccccc" stroke-width="{sw:.6g}"/>'
        )
    if unit_circle:
        parts.append(
            f'<circle cx="0" cy="0" r="1" fill="none" stroke="#888888" '
            f'stroke-width="{sw:.6g}" stroke-dasharray="{4 * sw:.6g} {3 * sw:.6g}"/>'
        )
    for x, y in points:
        parts.append(
            f'<circle cx="{x:.9g}" cy="{-y:.9g}" r="{r:.6g}" fill="#1f6feb"/>'
        )
    parts.append("</svg>\n")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(parts))


# --- subcommands -----------------------------------------------------------


def cmd_family_info(args) -> int:
    try:
        p = link_presentation(args.family, args.n)
    except ValueError as exc:
        return _fail(str(exc), EXIT_USAGE)
    _emit_json(
        {
            "family": p.family,
            "n": p.n,
            "crossings": p.crossings,
            "writhe": p.writhe,
            "n_dark": p.n_dark,
            "n_light": p.n_light,
            "n_components": p.n_components,
            "graph": _poly_obj(p.graph),
        }
    )
    return EXIT_OK


def _tutte_input(args):
    """(graph, kind) from either --graph FILE or --kind/--n."""
    if args.graph is not None:
        if args.kind is not None or args.n is not None:
            raise ValueError("give either --graph or --kind/--n, not both")
        return _load_graph(args.graph), None
    if args.kind is None or args.n is None:
        raise ValueError("need --graph FILE or both --kind and --n")
    return build_graph(args.kind, args.n), args.kind


def cmd_tutte(args) -> int:
    try:
        g, kind = _tutte_input(args)
    except (ValueError, OSError, KeyError) as exc:
        return _fail(str(exc), EXIT_USAGE)

    def run(method):
        if method == "brute":
            if g.edge_count > BRUTE_FORCE_EDGE_LIMIT:
                raise ValueError(
                    f"brute method limited to {BRUTE_FORCE_EDGE_LIMIT} edges"
                )
            return tutte_bruteforce(g)
        if method == "dc":
            return tutte_dc(g)
        if kind is None:
            raise ValueError("closed method needs --kind/--n")
        return tutte_family_closed(kind, args.n)

    if args.check_all:
        methods = ["dc"]
        if g.edge_count <= BRUTE_FORCE_EDGE_LIMIT:
            methods.insert(0, "brute")
        if kind is not None:
            methods.append("closed")
        polys = [run(m) for m in methods]
        if any(p != polys[0] for p in polys[1:]):
            for m, p in zip(methods, polys):
                print(f"{m}: {p.pretty()}", file=sys.stderr)
            return _fail("tutte methods disagree", EXIT_MATH)
        _emit_json(
            {
                "methods": methods,
                "agree": True,
                "polynomial": _poly_obj(polys[0]),
                "pretty": polys[0].pretty(),
            }
        )
        return EXIT_OK

    try:
        poly = run(args.method)
    except ValueError as exc:
        return _fail(str(exc), EXIT_USAGE)
    _emit_json(
        {
            "method": args.method,
            "polynomial": _poly_obj(poly),
            "pretty": poly.pretty(),
        }
    )
    return EXIT_OK


def cmd_jones(args) -> int:
    if args.graph is not None:
        if args.family is not None:
            return _fail("give either --family/--n or --graph/--writhe", EXIT_USAGE)
        if args.writhe is None:
            return _fail("--graph needs --writhe", EXIT_USAGE)
        try:
            sg = _load_signed_graph(args.graph)
        except (ValueError, OSError, KeyError) as exc:
            return _fail(str(exc), EXIT_USAGE)
        try:
            v = jones_nonalternating(sg, args.writhe)
        except ConsistencyError as exc:
            return _fail(str(exc), EXIT_MATH)
        _emit_json(
            {
                "writhe": args.writhe,
                "polynomial": _poly_obj(v),
                "pretty": v.pretty(),
            }
        )
        return EXIT_OK

    if args.family is None or args.n is None:
        return _fail("need --family and --n (or --graph/--writhe)", EXIT_USAGE)
    try:
        p = link_presentation(args.family, args.n)
    except ValueError as exc:
        return _fail(str(exc), EXIT_USAGE)
    closed = jones_family_closed(args.family, args.n)
    graphed = jones_alternating(p)
    if closed != graphed:
        print(f"closed: {closed.pretty()}", file=sys.stderr)
        print(f"graph:  {graphed.pretty()}", file=sys.stderr)
        return _fail("jones routes disagree", EXIT_MATH)
    rep = structural_report(p, closed)
    _emit_json(
        {
            "family": args.family,
            "n": args.n,
            "crossings": p.crossings,
            "writhe": p.writhe,
            "polynomial": _poly_obj(closed),
            "pretty": closed.pretty(),
            "degree_span": _num_json(rep.span),
            "special_value_ok": rep.special_ok,
            "structural_ok": rep.all_ok,
        }
    )
    if not rep.all_ok:
        return _fail("structural checks failed", EXIT_MATH)
    return EXIT_OK


def cmd_zeros(args) -> int:
    try:
        zs = jones_zeros(args.family, args.n)
    except ValueError as exc:
        return _fail(str(exc), EXIT_USAGE)
    except RootFindingError as exc:
        return _fail(f"root finding did not converge: {exc}", EXIT_NOCONV)
    rows = ["re,im"]
    rows += [f"{z.real:.17g},{z.imag:.17g}" for z in zs]
    _write_text(args.out, "\n".join(rows) + "\n")
    if args.svg:
        _svg_scatter([(z.real, z.imag) for z in zs], args.svg, unit_circle=True)
    return EXIT_OK


def cmd_locus(args) -> int:
    window = None
    if args.family == "F":
        if args.rmax is not None:
            return _fail("family F uses --window, not --rmax", EXIT_USAGE)
        if args.window is not None:
            window = tuple(args.window)
    else:
        if args.window is not None:
            return _fail(f"family {args.family} uses --rmax, not --window", EXIT_USAGE)
        if args.rmax is not None:
            window = args.rmax
    try:
        pts = trace_locus(args.family, window=window, resolution=args.resolution)
    except ValueError as exc:
        return _fail(str(exc), EXIT_USAGE)
    rows = ["re,im,j,k"]
    rows += [
        f"{p.t.real:.17g},{p.t.imag:.17g},{p.tied_pair[0]},{p.tied_pair[1]}"
        for p in pts
    ]
    _write_text(args.out, "\n".join(rows) + "\n")
    if args.svg:
        _svg_scatter(
            [(p.t.real, p.t.imag) for p in pts],
            args.svg,
            unit_circle=args.overlay_unit_circle,
        )
    return EXIT_OK


def _potts_graph(args):
    if args.graph is not None:
        if args.kind is not None or args.n is not None:
            raise ValueError("give either --graph or --kind/--n, not both")
        return _load_graph(args.graph)
    if args.kind is None or args.n is None:
        raise ValueError("need --graph FILE or both --kind and --n")
    return build_graph(args.kind, args.n)


def cmd_potts(args) -> int:
    try:
        g = _potts_graph(args)
    except (ValueError, OSError, KeyError) as exc:
        return _fail(str(exc), EXIT_USAGE)
    q, v = args.q, args.v
    via = potts_via_tutte(g, q, v)
    out = {
        "q": _num_json(q),
        "v": _num_json(v),
        "z": _num_json(via),
    }
    if g.edge_count <= BRUTE_FORCE_EDGE_LIMIT:
        direct = potts_direct(g, q, v)
        out["z_direct"] = _num_json(direct)
        err = abs(complex(direct) - complex(via))
        if err > 1e-9 * max(1.0, abs(complex(direct))):
            _emit_json(out)
            return _fail("cluster sum and Tutte route disagree", EXIT_MATH)
    _emit_json(out)
    return EXIT_OK


def _poly_pretty_q(coeffs) -> str:
    """Ascending chromatic coefficients as a minimal-exponent-first string."""
    terms = [(e, c) for e, c in enumerate(coeffs) if c]
    if not terms:
        return "0"
    low = terms[0][0]
    inner = []
    for e, c in terms:
        e -= low
        mag = abs(c)
        var = "" if e == 0 else ("q" if e == 1 else f"q^{e}")
        body = var if (mag == 1 and var) else (f"{mag}{var}" if var else f"{mag}")
        if not inner:
            inner.append(body if c > 0 else f"-{body}")
        else:
            inner.append(f"+ {body}" if c > 0 else f"- {body}")
    joined = " ".join(inner)
    if low == 0:
        return joined
    prefix = "q" if low == 1 else f"q^{low}"
    return f"{prefix}*({joined})"


def cmd_chromatic(args) -> int:
    try:
        g = _potts_graph(args)
    except (ValueError, OSError, KeyError) as exc:
        return _fail(str(exc), EXIT_USAGE)
    coeffs = chromatic(g)
    out = {"coefficients": coeffs, "pretty": _poly_pretty_q(coeffs)}
    if args.q is not None:
        value = 0
        for c in reversed(coeffs):
            value = value * args.q + c
        out["q"] = args.q
        out["value"] = value
    _emit_json(out)
    return EXIT_OK


def cmd_verify(args) -> int:
    results = run_suite(args.suite, seed=args.seed)
    width = max(len(r.name) for r in results)
    for r in results:
        line = f"{'PASS' if r.ok else 'FAIL'}  {r.name:<{width}}"
        if r.detail:
            line += f"  [{r.detail}]"
        print(line)
    passed = sum(r.ok for r in results)
    print(f"{passed}/{len(results)} checks passed (suite: {args.suite})")
    return EXIT_OK if passed == len(results) else EXIT_MATH


# --- parser ----------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="linkzeros",
        description="Exact Tutte/Jones engine for alternating-link families, "
        "their zeros, and accumulation loci.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("family-info", help="link presentation data as JSON")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--n", required=True, type=int)
    p.set_defaults(func=cmd_family_info)

    p = sub.add_parser("tutte", help="Tutte polynomial of a graph or family kind")
    p.add_argument("--kind", choices=GRAPH_KINDS)
    p.add_argument("--n", type=int)
    p.add_argument("--graph", metavar="FILE", help="graph JSON file")
    p.add_argument("--method", choices=("brute", "dc", "closed"), default="dc")
    p.add_argument(
        "--check-all",
        action="store_true",
        help="run every applicable method and require agreement",
    )
    p.set_defaults(func=cmd_tutte)

    p = sub.add_parser("jones", help="Jones polynomial of a family member or signed graph")
    p.add_argument("--family", choices=FAMILIES)
    p.add_argument("--n", type=int)
    p.add_argument("--graph", metavar="FILE", help="signed graph JSON file")
    p.add_argument("--writhe", type=int)
    p.set_defaults(func=cmd_jones)

    p = sub.add_parser("zeros", help="zeros of a member's Jones polynomial")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--out", metavar="CSV", help="write re,im rows here (default stdout)")
    p.add_argument("--svg", metavar="FILE", help="also write a scatter SVG")
    p.set_defaults(func=cmd_zeros)

    p = sub.add_parser("locus", help="equimodular accumulation curve points")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--rmax", type=float, help="polar scan radius (families A, B, E)")
    p.add_argument(
        "--window",
        type=float,
        nargs=4,
        metavar=("XMIN", "XMAX", "YMIN", "YMAX"),
        help="rectangular scan window (family F)",
    )
    p.add_argument("--resolution", type=int, default=2000)
    p.add_argument("--out", metavar="CSV", help="write re,im,j,k rows here (default stdout)")
    p.add_argument("--svg", metavar="FILE", help="also write a scatter SVG")
    p.add_argument("--overlay-unit-circle", action="store_true")
    p.set_defaults(func=cmd_locus)

    p = sub.add_parser("potts", help="Potts partition function Z(G, q, v)")
    p.add_argument("--kind", choices=GRAPH_KINDS)
    p.add_argument("--n", type=int)
    p.add_argument("--graph", metavar="FILE", help="graph JSON file")
    p.add_argument("--q", required=True, type=_parse_scalar)
    p.add_argument("--v", required=True, type=_parse_scalar)
    p.set_defaults(func=cmd_potts)

    p = sub.add_parser("chromatic", help="chromatic polynomial coefficients")
    p.add_argument("--kind", choices=GRAPH_KINDS)
    p.add_argument("--n", type=int)
    p.add_argument("--graph", metavar="FILE", help="graph JSON file")
    p.add_argument("--q", type=int, help="also evaluate at this q")
    p.set_defaults(func=cmd_chromatic)

    p = sub.add_parser("verify", help="run the reproduction check suite")
    p.add_argument("--suite", choices=SUITES, default="quick")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    return ap


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
