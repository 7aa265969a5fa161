"""Cyclic Hochschild complexes of free algebras."""

import json

from ._core import (
    ParseError,
    bracket,
    diff,
    mc_residual,
    normal_form,
    overlap_count,
    purity_json,
    slice,
    slice_homology,
)


def purity(r, variant="tilde", m_min=2, m_max=3, t_abs=3):
    """Purity report as a dict."""
    return json.loads(purity_json(r, variant, m_min, m_max, t_abs))


__all__ = [
    "ParseError",
    "bracket",
    "diff",
    "mc_residual",
    "normal_form",
    "overlap_count",
    "purity",
    "slice",
    "slice_homology",
]
