"""Jumping lines and Bourbaki ideals of reduced plane curves.

Every function takes polynomials as text in x, y, z.  ``field`` is the
minimal polynomial in ``t`` of a number field, or empty for the rationals.
"""

import json

from ._jumploci import (
    SCHEMA_VERSION,
    MathError,
    ParseError,
    __version__,
    analyze_json,
    canonical,
    corpus_json,
    corpus_names,
    splitting_json,
)

__all__ = [
    "SCHEMA_VERSION",
    "MathError",
    "ParseError",
    "__version__",
    "analyze",
    "canonical",
    "corpus",
    "corpus_names",
    "splitting",
]


def analyze(poly, field="", *, degree_bound=-1, syzygy=None, combo_t=None, loci=True, bourbaki=True, seed=None):
    """Full report as a dict; theorem checks are listed under ``checks``."""
    kwargs = {}
    if seed is not None:
        kwargs["seed"] = seed
    text = analyze_json(poly, field, degree_bound, syzygy, combo_t, loci, bourbaki, **kwargs)
    return json.loads(text)


def splitting(poly, line, field=""):
    """Splitting type along the line ``a,b,c`` (that is, ax+by+cz=0)."""
    if not isinstance(line, str):
        line = ",".join(str(v) for v in line)
    return json.loads(splitting_json(poly, line, field))


def corpus(name):
    """Run one worked example against its stored expectations."""
    return json.loads(corpus_json(name))
