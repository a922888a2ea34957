"""File formats: complex JSON, OFF meshes, PIP JSON, report dictionaries.

Complex JSON: {"vertices": [{"id": int, "f": value}], "simplices": [[int, ...]]}
where a value is a number or an arbitrarily nested list of values (subdivided
complexes carry set-valued vertices).  Simplices may list maximal cells only;
the closure is computed on load.

PIP JSON: {"elements": [...], "covers": [[lo, hi], ...],
"inconsistent": [[p, q], ...]} with minimal inconsistent pairs.
"""

from __future__ import annotations

import numbers

from .cat0 import CollapseCertificate, CubeComplex, Pip
from .complexes import SimplicialComplex, build_complex
from .errors import InvalidInput
from .gradient import DiscreteGradientField, VPath
from .ordering import ValueSet


def value_from_json(raw):
    if isinstance(raw, bool) or not isinstance(raw, (numbers.Real, list)):
        raise InvalidInput(f"not a valuation value: {raw!r}")
    if isinstance(raw, list):
        return ValueSet(value_from_json(item) for item in raw)
    return float(raw)


def value_to_json(value):
    if isinstance(value, ValueSet):
        return [value_to_json(item) for item in value.elements]
    return value


def complex_from_dict(payload: dict) -> SimplicialComplex:
    try:
        vertices = payload["vertices"]
        simplices = payload["simplices"]
    except (TypeError, KeyError) as exc:
        raise InvalidInput(f"complex payload missing {exc}") from None
    valuation = {}
    for entry in vertices:
        vid = entry["id"]
        if not isinstance(vid, int) or vid in valuation:
            raise InvalidInput(f"bad or repeated vertex id {vid!r}")
        valuation[vid] = value_from_json(entry["f"])
    return build_complex(simplices, valuation)


def complex_to_dict(delta: SimplicialComplex) -> dict:
    payload = {
        "vertices": [{"id": v, "f": value_to_json(delta.valuation[v])}
                     for v in delta.vertices],
        "simplices": [list(s) for s in delta.maximal_simplices()],
    }
    if delta.barycenter_of is not None:
        payload["barycenters"] = [{"id": b, "simplex": list(s)}
                                  for b, s in sorted(delta.barycenter_of.items())]
    return payload


def load_off(off_text: str, vertex_values: list[float]) -> SimplicialComplex:
    """Standard OFF faces as maximal simplices, one scalar per vertex."""
    tokens = []
    for line in off_text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            tokens.extend(line.split())
    if not tokens or tokens[0] != "OFF":
        raise InvalidInput("not an OFF file")
    try:
        nv, nf = int(tokens[1]), int(tokens[2])
        pos = 4 + 3 * nv  # skip counts line and coordinates
        faces = []
        for _ in range(nf):
            k = int(tokens[pos])
            faces.append([int(t) for t in tokens[pos + 1: pos + 1 + k]])
            pos += 1 + k
    except (ValueError, IndexError) as exc:
        raise InvalidInput(f"malformed OFF data: {exc}") from None
    if len(vertex_values) != nv:
        raise InvalidInput(f"{nv} vertices but {len(vertex_values)} scalar values")
    valuation = {i: float(v) for i, v in enumerate(vertex_values)}
    return build_complex(faces, valuation)


def gradient_report(field_: DiscreteGradientField, vpaths: list[VPath] | None = None) -> dict:
    report = {
        "variant": field_.variant,
        "pairs": [[list(s), list(t)] for s, t in sorted(field_.pairs.items())],
        "critical": [list(s) for s in field_.sorted_critical()],
    }
    if vpaths is not None:
        report["vpaths"] = [[list(c) for c in p.cells] for p in vpaths]
    return report


def smoothness_report_dict(report) -> dict:
    return {
        "smooth": report.smooth,
        "witnesses": [
            {"simplex": list(s), "cofacet": list(t), "argmin": h, "shifted_argmin": h2}
            for s, t, h, h2 in report.witnesses
        ],
    }


def pip_from_dict(payload: dict) -> Pip:
    try:
        return Pip(payload["elements"],
                   [tuple(c) for c in payload.get("covers", [])],
                   [tuple(p) for p in payload.get("inconsistent", [])])
    except (TypeError, KeyError) as exc:
        raise InvalidInput(f"bad PIP payload: {exc}") from None


def pip_to_dict(pip: Pip) -> dict:
    return {
        "elements": list(pip.elements),
        "covers": [list(c) for c in pip.covers],
        "inconsistent": [list(p) for p in pip.minimal_inconsistent],
    }


def certificate_to_dict(pip: Pip, certificate: CollapseCertificate,
                        complex_: CubeComplex) -> dict:
    def cube(c):
        return c.describe(pip)

    return {
        "cells": len(complex_),
        "euler_characteristic": complex_.euler_characteristic(),
        "matching": [[cube(s), cube(t)] for s, t in
                     sorted(certificate.pairs.items(), key=lambda p: (p[0].ideal, p[0].marks))],
        "critical": [cube(c) for c in sorted(certificate.critical,
                                             key=lambda c: (c.ideal, c.marks))],
        "collapse_order": [[cube(s), cube(t)] for s, t in certificate.collapse_order],
    }
