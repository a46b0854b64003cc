#!/usr/bin/env python3
"""
Hasse Diagram Export
Writes the covering relation of a lower Bruhat interval as directed-graph text
(DOT), one node line per element and one edge line per covering pair.
"""

import logging
from pathlib import Path
from typing import Callable, Dict, Union

import networkx as nx

try:
    from core.bruhat import BruhatInterval, hasse_graph, lower_interval
    from core.orbits import Smoothness, is_parabolic, smoothness
except ImportError:
    from ..core.bruhat import BruhatInterval, hasse_graph, lower_interval
    from ..core.orbits import Smoothness, is_parabolic, smoothness

logger = logging.getLogger(__name__)

IntervalProvider = Callable[..., BruhatInterval]

NODE_COLORS: Dict[str, str] = {
    "parabolic": "blue",
    "singular": "red",
    "regular": "black",
}


def node_class(w, interval_provider: IntervalProvider = lower_interval) -> str:
    """singular when the orbit closure is singular, else parabolic or regular."""
    _, smooth = smoothness(w, interval_provider(w))
    if smooth is Smoothness.FALSE:
        return "singular"
    return "parabolic" if is_parabolic(w) else "regular"


def annotated_graph(interval: BruhatInterval, interval_provider: IntervalProvider = lower_interval) -> nx.DiGraph:
    graph = hasse_graph(interval)
    for w in interval.members:
        kind = node_class(w, interval_provider)
        graph.nodes[w.word_string]["class"] = kind
        graph.nodes[w.word_string]["color"] = NODE_COLORS[kind]
    return graph


def _quote(text: str) -> str:
    return '"' + text.replace('"', '\\"') + '"'


def to_dot(interval: BruhatInterval, interval_provider: IntervalProvider = lower_interval) -> str:
    """DOT text with nodes in (length, word) order and edges sorted likewise."""
    graph = annotated_graph(interval, interval_provider)
    name = f"{interval.top.system.label} {interval.top.word_string}"

    lines = [f"digraph {_quote(name)} {{", "  rankdir=BT;"]
    for u in interval.sorted_members():
        attrs = graph.nodes[u.word_string]
        lines.append(
            f"  {_quote(u.word_string)} [length={attrs['length']}, "
            f"class={_quote(attrs['class'])}, color={_quote(attrs['color'])}];"
        )

    order = {u.word_string: k for k, u in enumerate(interval.sorted_members())}
    for source, target in sorted(graph.edges(), key=lambda edge: (order[edge[0]], order[edge[1]])):
        lines.append(f"  {_quote(source)} -> {_quote(target)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def write_dot(
    interval: BruhatInterval,
    path: Union[str, Path],
    interval_provider: IntervalProvider = lower_interval,
) -> Path:
    path = Path(path)
    path.write_text(to_dot(interval, interval_provider), encoding="utf-8")
    logger.debug(f"Wrote Hasse diagram of {interval.top.word_string} to {path}")
    return path


__all__ = ["NODE_COLORS", "node_class", "annotated_graph", "to_dot", "write_dot"]
