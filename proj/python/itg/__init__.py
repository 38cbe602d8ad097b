"""Iterated total and line graphs: diameters, spectra, incidence energy."""

import json

from ._itg import (
    DomainError,
    Graph,
    GraphError,
    ItgError,
    ParseError,
    PreconditionError,
    ResourceError,
    adjacency_spectrum,
    char_poly,
    contains_induced,
    cospectral,
    diameter,
    family,
    ie_line_bound,
    ie_total_bounds,
    incidence_energy,
    is_connected,
    isomorphic,
    iterate,
    line_graph,
    parse_graph6,
    q_spectrum,
    regular_iterate_params,
    to_graph6,
    total_graph,
    verify_json,
)


def verify(theorem, corpus="gen:1..7", ks=(), reading="literal", threads=0):
    """Run one checker over a corpus and return the report as a dict."""
    return json.loads(verify_json(theorem, corpus, list(ks), reading, threads))


__all__ = [name for name in dir() if not name.startswith("_") and name != "json"]
