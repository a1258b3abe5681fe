# -*- coding: utf-8 -*-
"""
src.landscape_atlas.utils.render.py - Landscape-Atlas
Created by NCagle
2025-02-21
      _
   __(.)<
~~~⋱___)~~~

Dot-language rendering of a rank landscape.

Nodes are labeled with their bitstring and rank letter and shaded blue by
rank (darker is better). Global optima are yellow, strict suboptima pink
and weak suboptima orange. Improving moves are directed worse -> better;
neutral edges are undirected, dashed and light.

Rasterizing is left to Graphviz:
    dot -Tpng class.dot -o class.png
"""

import re
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from landscape_atlas.analysis.hypercube import to_bits
from landscape_atlas.analysis.props import improving_moves, neutral_edges, node_roles
from landscape_atlas.models.base import NodeRole, RankVector, rank_letter
from landscape_atlas.utils import constants as c
from landscape_atlas.utils.errors import DomainError


@dataclass(frozen=True)
class RenderStyle:
    """
    Arguments:
        role_colors (Dict[NodeRole, str]): Fill per highlighted role
        shade_dark (Tuple[int, int, int]): RGB for rank 1
        shade_light (Tuple[int, int, int]): RGB for the worst rank
        improving_color (str): Directed edge color
        neutral_color (str): Neutral edge color
        neutral_style (str): Dot style of neutral edges
    """
    role_colors: Dict[NodeRole, str] = field(default_factory=lambda: {
        NodeRole.GLOBAL_OPTIMUM: c.GLOBAL_OPTIMUM_COLOR,
        NodeRole.STRICT_SUBOPTIMUM: c.STRICT_SUBOPTIMUM_COLOR,
        NodeRole.WEAK_SUBOPTIMUM: c.WEAK_SUBOPTIMUM_COLOR,
    })
    shade_dark: Tuple[int, int, int] = c.RANK_SHADE_DARK
    shade_light: Tuple[int, int, int] = c.RANK_SHADE_LIGHT
    improving_color: str = c.IMPROVING_EDGE_COLOR
    neutral_color: str = c.NEUTRAL_EDGE_COLOR
    neutral_style: str = "dashed"


    def __post_init__(self):
        colors = list(self.role_colors.values())
        if len(set(colors)) != len(colors):
            raise DomainError("Each highlighted role needs its own color")
        if NodeRole.GLOBAL_OPTIMUM not in self.role_colors:
            raise DomainError("Global optima must always be highlighted")


    def shade(self, rank: int, k: int) -> str:
        """Blue fill for a rank; 1 is darkest."""
        t = 0.0 if k == 1 else (rank - 1) / (k - 1)
        rgb = [round(d + t * (l - d)) for d, l in zip(self.shade_dark, self.shade_light)]
        return "#{:02X}{:02X}{:02X}".format(*rgb)

    def fill(self, role: NodeRole, rank: int, k: int) -> str:
        return self.role_colors.get(role) or self.shade(rank, k)


def _font_color(fill: str) -> str:
    r, g, b = (int(fill[i:i + 2], 16) for i in (1, 3, 5))
    return "white" if 0.299 * r + 0.587 * g + 0.114 * b < 128 else "black"


def landscape_to_dot(
    rv: RankVector,
    style: Optional[RenderStyle] = None,
    title: str = "landscape"
) -> str:
    """
    Dot source for a rank landscape

    Arguments:
        rv (RankVector): Landscape to draw
        style (Optional[RenderStyle]): Colors; defaults when None
        title (str): Graph name, restricted to letters, digits and _

    Returns:
        str: A digraph with one node per hypercube node
    """
    style = style or RenderStyle()
    if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", title):
        raise DomainError(f"Graph name must be a dot identifier: {title!r}")

    template = """digraph {title} {{
      rankdir = "BT" ;
      node [fontname="Helvetica", fontsize=10, shape=circle, style=filled] ;

      // The nodes
      {nodes}

      // Improving moves
      {moves}

      // Neutral edges
      {neutral}
}}
"""
    roles = node_roles(rv)
    nodes = []
    for x in range(rv.size):
        fill = style.fill(roles[x], rv[x], rv.k)
        nodes.append(
            f'"{to_bits(x, rv.n)}" [label="{to_bits(x, rv.n)}\\n{rank_letter(rv[x])}", '
            f'fillcolor="{fill}", fontcolor="{_font_color(fill)}", role="{roles[x].name.lower()}"] ;'
        )
    moves = [
        f'"{to_bits(x, rv.n)}" -> "{to_bits(y, rv.n)}" [color="{style.improving_color}"] ;'
        for x, y in improving_moves(rv)
    ]
    neutral = [
        f'"{to_bits(x, rv.n)}" -> "{to_bits(y, rv.n)}" '
        f'[dir=none, style={style.neutral_style}, color="{style.neutral_color}"] ;'
        for x, y in neutral_edges(rv)
    ]
    return template.format(
        title=title,
        nodes="\n      ".join(nodes),
        moves="\n      ".join(moves),
        neutral="\n      ".join(neutral),
    )


"""
╔══════════════════╗
║ Dot Syntax Check ║
╚══════════════════╝
"""
_ID = r'"(?:[^"\\]|\\.)*"|[A-Za-z_][A-Za-z0-9_.]*|-?\d+(?:\.\d+)?'
_ATTR = rf"\s*({_ID})\s*=\s*({_ID})\s*"
_ATTR_LIST = rf"\[(?:{_ATTR}(?:,{_ATTR})*)?\]"
_STATEMENTS = (
    ("edge", re.compile(rf"({_ID})\s*->\s*({_ID})\s*({_ATTR_LIST})?")),
    ("default", re.compile(rf"(?:node|edge|graph)\s*{_ATTR_LIST}")),
    ("assign", re.compile(rf"({_ID})\s*=\s*({_ID})")),
    ("node", re.compile(rf"({_ID})\s*({_ATTR_LIST})?")),
)


@dataclass
class DotGraph:
    name: str
    nodes: Dict[str, Dict[str, str]] = field(default_factory=dict)
    edges: List[Tuple[str, str, Dict[str, str]]] = field(default_factory=list)

    @property
    def directed_edges(self) -> List[Tuple[str, str]]:
        return [(a, b) for a, b, attrs in self.edges if attrs.get("dir") != "none"]

    @property
    def undirected_edges(self) -> List[Tuple[str, str]]:
        return [(a, b) for a, b, attrs in self.edges if attrs.get("dir") == "none"]


def _unquote(token: str) -> str:
    if token.startswith('"'):
        return token[1:-1].replace('\\"', '"')
    return token


def _attributes(text: Optional[str]) -> Dict[str, str]:
    if not text:
        return {}
    return {_unquote(k): _unquote(v) for k, v in re.findall(_ATTR, text[1:-1] + " ")}


def parse_dot(text: str) -> DotGraph:
    """
    Parse the digraph subset landscape_to_dot emits: node, edge, default
    and assignment statements, each ended by ';', plus // comments.

    Raises:
        DomainError: Text outside that grammar
    """
    body = re.sub(r"//[^\n]*", "", text).strip()
    match = re.fullmatch(r"digraph\s+([A-Za-z_][A-Za-z0-9_]*)\s*\{(.*)\}", body, re.DOTALL)
    if not match:
        raise DomainError("Expected 'digraph <name> { ... }'")
    graph = DotGraph(match.group(1))

    statements = [s.strip() for s in re.split(r";(?=(?:[^\"]*\"[^\"]*\")*[^\"]*$)", match.group(2))]
    for statement in filter(None, statements):
        for kind, pattern in _STATEMENTS:
            found = pattern.fullmatch(statement)
            if found:
                break
        else:
            raise DomainError(f"Not a dot statement: {statement!r}")

        if kind == "edge":
            a, b = _unquote(found.group(1)), _unquote(found.group(2))
            for end in (a, b):
                graph.nodes.setdefault(end, {})
            graph.edges.append((a, b, _attributes(found.group(3))))
        elif kind == "node":
            graph.nodes.setdefault(_unquote(found.group(1)), {}).update(_attributes(found.group(2)))
    return graph
