#!/usr/bin/env python3
"""
Bruhat Order
Order test, lower intervals [e, w], Poincaré coefficients and covering relations.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

import networkx as nx

from .coxeter import (
    CoxeterElement,
    Side,
    check_same_system,
    from_word,
    identity,
    is_reduced_word,
)
from .errors import ParseError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BruhatInterval:
    """Lower interval [e, w] with its rank-generating coefficients."""
    top: CoxeterElement
    members: FrozenSet[CoxeterElement]
    poincare: Tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.members)

    def sorted_members(self) -> List[CoxeterElement]:
        return sorted(self.members, key=lambda u: (u.length, u.word))

    def __contains__(self, element: CoxeterElement) -> bool:
        return element in self.members


def length_profile(elements: Iterable[CoxeterElement], top_length: int) -> Tuple[int, ...]:
    coefficients = [0] * (top_length + 1)
    for element in elements:
        coefficients[element.length] += 1
    return tuple(coefficients)


# Entries are (u, w) pairs; A5 alone has 518400
ORDER_CACHE_SIZE = 1 << 20


@lru_cache(maxsize=ORDER_CACHE_SIZE)
def _leq(u: CoxeterElement, w: CoxeterElement) -> bool:
    if u.length > w.length:
        return False
    if u.length == w.length:
        return u == w
    if u.length == 0:
        return True
    s = min(w.left_descents)
    sw = w.multiply_generator(s, Side.LEFT)
    if u.has_descent(s, Side.LEFT):
        return _leq(u.multiply_generator(s, Side.LEFT), sw)
    return _leq(u, sw)


def bruhat_leq(u: CoxeterElement, w: CoxeterElement) -> bool:
    """u <= w, by the descent recursion on a left descent of w."""
    check_same_system(u, w)
    return _leq(u, w)


def lower_interval(w: CoxeterElement, word: Optional[Sequence[int]] = None) -> BruhatInterval:
    """
    [e, w] by the sub-product recursion over a reduced word of w:
    S_0 = {e}, S_{i+1} = S_i | S_i * s_{i+1}.

    `word` defaults to the canonical word; any other reduced word of w gives
    the same result.
    """
    if word is None:
        word = w.word
    else:
        word = tuple(word)
        if len(word) != w.length or not is_reduced_word(w.system, word) or from_word(w.system, word) != w:
            raise ParseError(f"{word} is not a reduced word for {w.word_string}")

    members = {identity(w.system)}
    for s in word:
        members |= {u.multiply_generator(s, Side.RIGHT) for u in members}

    return BruhatInterval(
        top=w,
        members=frozenset(members),
        poincare=length_profile(members, w.length),
    )


def lower_interval_filtered(w: CoxeterElement, elements: Iterable[CoxeterElement]) -> BruhatInterval:
    """[e, w] by filtering a full enumeration with bruhat_leq."""
    members = frozenset(u for u in elements if bruhat_leq(u, w))
    return BruhatInterval(top=w, members=members, poincare=length_profile(members, w.length))


def is_palindromic(interval: Union[BruhatInterval, Sequence[int]]) -> bool:
    """b_k == b_{l(w)-k} for every k."""
    coefficients = interval.poincare if isinstance(interval, BruhatInterval) else tuple(interval)
    return tuple(coefficients) == tuple(reversed(coefficients))


def covering_edges(interval: BruhatInterval) -> List[Tuple[CoxeterElement, CoxeterElement]]:
    """Pairs u < v in the interval with l(v) = l(u) + 1, sorted by (l(u), word(u), word(v))."""
    by_length = {}
    for u in interval.members:
        by_length.setdefault(u.length, []).append(u)

    edges = []
    for level, lower in by_length.items():
        for u in lower:
            for v in by_length.get(level + 1, ()):
                if _leq(u, v):
                    edges.append((u, v))

    edges.sort(key=lambda edge: (edge[0].length, edge[0].word, edge[1].word))
    return edges


def hasse_graph(interval: BruhatInterval) -> nx.DiGraph:
    """Covering relation of the interval as a directed graph keyed by canonical word."""
    graph = nx.DiGraph()
    for u in interval.sorted_members():
        graph.add_node(u.word_string, length=u.length, word=u.word)
    for u, v in covering_edges(interval):
        graph.add_edge(u.word_string, v.word_string)
    return graph


def group_poincare(elements: Iterable[CoxeterElement]) -> Tuple[int, ...]:
    """Length-generating coefficients of a whole (enumerated) group."""
    elements = list(elements)
    top = max(element.length for element in elements)
    return length_profile(elements, top)


def clear_order_cache():
    _leq.cache_clear()


def order_cache_info():
    return _leq.cache_info()


__all__ = [
    "BruhatInterval",
    "length_profile",
    "bruhat_leq",
    "lower_interval",
    "lower_interval_filtered",
    "is_palindromic",
    "covering_edges",
    "hasse_graph",
    "group_poincare",
    "clear_order_cache",
    "order_cache_info",
    "ORDER_CACHE_SIZE",
]
