"""
FUN diagram output formats: JSON document and Graphviz DOT
"""
import json
from typing import Dict

from fun.diagram import FunDiagram
from fun.states import EdgeState, VertexState

EDGE_STYLE = {
    EdgeState.FIX: 'color="black", style="solid"',
    EdgeState.BC: 'color="blue", style="dashed"',
    EdgeState.CC: 'color="red", style="bold"',
    EdgeState.CBC: 'color="purple", style="dotted"',
}

VERTEX_SHAPE = {
    VertexState.NOT_DOMINATED: "doublecircle",
    VertexState.CYCLE_DOMINATED: "circle",
    VertexState.FIXEDLY_DOMINATED: "box",
}


def diagram_to_dict(d: FunDiagram) -> Dict:
    names = d.names
    return {
        "edges": [[names[x], names[y], w, s.value] for x, y, w, s in d.edges()],
        "vertex_states": {names[v]: d.vertex_state(v).value for v in range(d.m)},
        "winners": [names[v] for v in sorted(d.winners())],
    }


def diagram_to_json(d: FunDiagram) -> str:
    return json.dumps(diagram_to_dict(d), indent=2)


def _quote(name: str) -> str:
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def diagram_to_dot(d: FunDiagram) -> str:
    lines = ["digraph FUN {", "  rankdir=TB;"]
    for v in range(d.m):
        lines.append(f"  {_quote(d.names[v])} [shape={VERTEX_SHAPE[d.vertex_state(v)]}];")
    for x, y, w, s in d.edges():
        lines.append(
            f"  {_quote(d.names[x])} -> {_quote(d.names[y])} [label=\"{w} {s.value}\", {EDGE_STYLE[s]}];"
        )
    lines.append("}")
    return "\n".join(lines) + "\n"
