"""Exact Tutte and Jones polynomials for parametric families of alternating
links, their zero sets, and the equimodular loci where the zeros accumulate.

Subpackage map:

* :mod:`linkzeros.polynomials` -- exact sparse polynomial arithmetic
  (bivariate, bivariate Laurent, and quarter-integer Laurent in ``t``).
* :mod:`linkzeros.graphs` -- multigraphs, the named graph families, and
  link presentations built from them.
* :mod:`linkzeros.tutte` -- Tutte polynomials (brute force, memoized
  deletion-contraction, closed family forms), the signed variant, and the
  Potts / chromatic specializations.
* :mod:`linkzeros.jones` -- Jones polynomials via the Tutte substitution,
  closed family forms, the signed-graph route, and structural checks.
* :mod:`linkzeros.asymptotics` -- dominant-term systems, zero finding, and
  tracing of the equimodular accumulation curves.
* :mod:`linkzeros.verify` -- the reproduction check suites.
* :mod:`linkzeros.cli` -- the ``linkzeros`` command line tool.
"""

from .polynomials import (
    BivarLaurent,
    BivarPoly,
    InexactDivision,
    QuarterLaurent,
    exact_divide,
    jones_substitute,
)
from .graphs import (
    LinkPresentation,
    Multigraph,
    SignedMultigraph,
    build_graph,
    dual_pair,
    link_component_count,
    link_presentation,
)
from .tutte import (
    chromatic,
    chromatic_eval,
    potts_direct,
    potts_via_tutte,
    signed_tutte,
    tutte_bruteforce,
    tutte_dc,
    tutte_family_closed,
)
from .jones import (
    jones_alternating,
    jones_family_closed,
    jones_nonalternating,
    mirror,
    skein_check,
    structural_report,
    wk_extract,
)
from .asymptotics import (
    LocusPoint,
    RootFindingError,
    closed_form_locus_distance,
    find_roots,
    jones_zeros,
    lambda_system,
    locus_landmarks,
    reconstruct_eval,
    region_classify,
    trace_locus,
    u_magnitude,
)
from .verify import CheckResult, run_suite

__all__ = [
    "BivarLaurent",
    "BivarPoly",
    "InexactDivision",
    "QuarterLaurent",
    "exact_divide",
    "jones_substitute",
    "LinkPresentation",
    "Multigraph",
    "SignedMultigraph",
    "build_graph",
    "dual_pair",
    "link_component_count",
    "link_presentation",
    "chromatic",
    "chromatic_eval",
    "potts_direct",
    "potts_via_tutte",
    "signed_tutte",
    "tutte_bruteforce",
    "tutte_dc",
    "tutte_family_closed",
    "jones_alternating",
    "jones_family_closed",
    "jones_nonalternating",
    "mirror",
    "skein_check",
    "structural_report",
    "wk_extract",
    "LocusPoint",
    "RootFindingError",
    "closed_form_locus_distance",
    "find_roots",
    "jones_zeros",
    "lambda_system",
    "locus_landmarks",
    "reconstruct_eval",
    "region_classify",
    "trace_locus",
    "u_magnitude",
    "CheckResult",
    "run_suite",
]

__version__ = "0.1.0"
