"""DOT exports: Hasse diagrams with matchings, V-path digraphs, cube complexes.

Unmatched facet arcs are drawn downward (upper to lower, dashed); matched
arcs are drawn reversed, upward and bold.  Critical cells get a double circle.
"""

from __future__ import annotations

from .cat0 import CollapseCertificate, CubeComplex, Pip
from .complexes import SimplicialComplex
from .gradient import DiscreteGradientField
from .hasse import HasseDiagram


def _label(cell) -> str:
    if isinstance(cell, tuple):
        return "{" + ",".join(str(v) for v in cell) + "}"
    return str(cell)


def hasse_dot(diagram: HasseDiagram, matched: set | None = None,
              critical: set | None = None, name: str = "hasse") -> str:
    matched = matched or set()
    critical = critical or set()
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for node in diagram.nodes:
        cell = diagram.cell_of[node]
        shape = "doublecircle" if cell in critical else "ellipse"
        lines.append(f'  n{node} [label="{_label(cell)}", shape={shape}];')
    for lo, hi in diagram.arcs:
        w = diagram.arc_weight[(lo, hi)]
        if (diagram.cell_of[lo], diagram.cell_of[hi]) in matched:
            lines.append(f'  n{lo} -> n{hi} [label="{w}", style=bold, color=red];')
        else:
            lines.append(f'  n{hi} -> n{lo} [label="{w}", style=dashed];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def gradient_dot(delta: SimplicialComplex, field_: DiscreteGradientField,
                 diagram: HasseDiagram, name: str = "gradient") -> str:
    matched = set(field_.pairs.items())
    return hasse_dot(diagram, matched=matched, critical=set(field_.critical), name=name)


def cube_dot(pip: Pip, complex_: CubeComplex, diagram: HasseDiagram,
             certificate: CollapseCertificate | None = None, name: str = "cubes") -> str:
    matched = set(certificate.pairs.items()) if certificate else set()
    critical = set(certificate.critical) if certificate else set()
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for node in diagram.nodes:
        cell = diagram.cell_of[node]
        desc = cell.describe(pip)
        label = "C(" + ",".join(desc["ideal"]) + "|" + ",".join(desc["marks"]) + ")"
        shape = "doublecircle" if cell in critical else "box"
        lines.append(f'  n{node} [label="{label}", shape={shape}];')
    for lo, hi in diagram.arcs:
        if (diagram.cell_of[lo], diagram.cell_of[hi]) in matched:
            lines.append(f"  n{lo} -> n{hi} [style=bold, color=red];")
        else:
            lines.append(f"  n{hi} -> n{lo} [style=dashed];")
    lines.append("}")
    return "\n".join(lines) + "\n"
