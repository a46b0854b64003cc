#!/usr/bin/env python3
"""
Coxeter Elements
Weyl group elements represented by their signed action on the positive roots.

An element w is stored as root_action, where root_action[k] = +(m+1) when
w(alpha_k) = alpha_m and -(m+1) when w(alpha_k) = -alpha_m. The length of w is
the number of negative entries.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .errors import GroupTooLarge, IndexOutOfRange, MixedSystems, NotTypeA, ParseError
from .rootdata import RootSystem

logger = logging.getLogger(__name__)

Word = Tuple[int, ...]


class Side(str, Enum):
    LEFT = "left"
    RIGHT = "right"


def _apply(action: Sequence[int], signed: int) -> int:
    """Apply an action to a signed root index."""
    image = action[abs(signed) - 1]
    return image if signed > 0 else -image


@dataclass(frozen=True, eq=False)
class CoxeterElement:
    """A Weyl group element; equality and hashing use the root action only."""
    system: RootSystem = field(repr=False)
    root_action: Tuple[int, ...]

    def __eq__(self, other) -> bool:
        if not isinstance(other, CoxeterElement):
            return NotImplemented
        return self.root_action == other.root_action and self.system.datum == other.system.datum

    def __hash__(self) -> int:
        return hash(self.root_action)

    def __repr__(self) -> str:
        return f"CoxeterElement({self.system.label}, {self.word_string})"

    @cached_property
    def length(self) -> int:
        return sum(1 for image in self.root_action if image < 0)

    @cached_property
    def word(self) -> Word:
        """ShortLex-minimal reduced word: repeatedly strip the smallest left descent."""
        letters: List[int] = []
        current = self
        while current.length > 0:
            s = min(current.left_descents)
            letters.append(s)
            current = current.multiply_generator(s, Side.LEFT)
        return tuple(letters)

    @property
    def word_string(self) -> str:
        return format_word(self.word)

    @property
    def is_identity(self) -> bool:
        return self.length == 0

    @cached_property
    def right_descents(self) -> FrozenSet[int]:
        """Generators s with w(alpha_s) negative."""
        return frozenset(s for s in range(1, self.system.rank + 1) if self.root_action[s - 1] < 0)

    @cached_property
    def left_descents(self) -> FrozenSet[int]:
        """Generators s with w^-1(alpha_s) negative."""
        descents = set()
        for image in self.root_action:
            if image < 0 and -image <= self.system.rank:
                descents.add(-image)
        return frozenset(descents)

    def has_descent(self, s: int, side: Side = Side.RIGHT) -> bool:
        return s in (self.right_descents if Side(side) is Side.RIGHT else self.left_descents)

    def multiply_generator(self, s: int, side: Side = Side.RIGHT) -> "CoxeterElement":
        """Return w*s (right) or s*w (left)."""
        rank = self.system.rank
        if not 1 <= s <= rank:
            raise IndexOutOfRange(f"Generator {s} outside 1..{rank}")
        table = self.system.reflection_tables[s - 1]
        if Side(side) is Side.RIGHT:
            action = tuple(_apply(self.root_action, image) for image in table)
        else:
            action = tuple(_apply(table, image) for image in self.root_action)
        return CoxeterElement(self.system, action)

    def __mul__(self, other: "CoxeterElement") -> "CoxeterElement":
        return multiply(self, other)


def format_word(word: Iterable[int]) -> str:
    word = tuple(word)
    return ",".join(str(s) for s in word) if word else "e"


def parse_word(text: str) -> Word:
    """Parse "1,2,1" (or "e" / "" for the identity) into generator indices."""
    text = (text or "").strip()
    if text in ("", "e"):
        return ()
    try:
        word = tuple(int(part) for part in text.split(","))
    except ValueError as e:
        raise ParseError(f"Malformed word '{text}': expected comma-separated integers") from e
    if any(s < 1 for s in word):
        raise ParseError(f"Malformed word '{text}': generator indices are 1-based")
    return word


def identity(system: RootSystem) -> CoxeterElement:
    return CoxeterElement(system, tuple(range(1, system.num_positive + 1)))


def from_word(system: RootSystem, word: Iterable[int]) -> CoxeterElement:
    """Build an element from any word, reduced or not."""
    element = identity(system)
    for s in word:
        element = element.multiply_generator(s, Side.RIGHT)
    return element


def multiply_generator(w: CoxeterElement, s: int, side: Side = Side.RIGHT) -> CoxeterElement:
    return w.multiply_generator(s, side)


def length(w: CoxeterElement) -> int:
    return w.length


def descents(w: CoxeterElement, side: Side = Side.RIGHT) -> "GeneratorSubset":
    found = w.right_descents if Side(side) is Side.RIGHT else w.left_descents
    return GeneratorSubset(tuple(sorted(found)))


def check_same_system(*elements: CoxeterElement):
    data = {element.system.datum for element in elements}
    if len(data) > 1:
        raise MixedSystems("Elements belong to different root systems")


def multiply(u: CoxeterElement, w: CoxeterElement) -> CoxeterElement:
    """Group product u*w."""
    check_same_system(u, w)
    result = u
    for s in w.word:
        result = result.multiply_generator(s, Side.RIGHT)
    return result


def inverse(w: CoxeterElement) -> CoxeterElement:
    return from_word(w.system, reversed(w.word))


def is_reduced_word(system: RootSystem, word: Sequence[int]) -> bool:
    element = identity(system)
    for s in word:
        if element.has_descent(s, Side.RIGHT):
            return False
        element = element.multiply_generator(s, Side.RIGHT)
    return True


@dataclass(frozen=True)
class GeneratorSubset:
    """A subset J of the simple generators, sorted and validated against a rank."""
    indices: Tuple[int, ...]

    @classmethod
    def of(cls, system: RootSystem, generators: Optional[Iterable[int]] = None) -> "GeneratorSubset":
        """All generators when `generators` is None."""
        if generators is None:
            generators = range(1, system.rank + 1)
        indices = tuple(sorted(set(generators)))
        for s in indices:
            if not 1 <= s <= system.rank:
                raise IndexOutOfRange(f"Generator {s} outside 1..{system.rank}")
        return cls(indices)

    def __iter__(self):
        return iter(self.indices)

    def __len__(self) -> int:
        return len(self.indices)

    def __contains__(self, s: int) -> bool:
        return s in self.indices


def longest_element(system: RootSystem, J: Optional[Iterable[int]] = None) -> CoxeterElement:
    """Longest element of the parabolic subgroup W_J (all generators when J is None)."""
    J = GeneratorSubset.of(system, J)
    element = identity(system)
    while True:
        ascents = [s for s in J if not element.has_descent(s, Side.RIGHT)]
        if not ascents:
            return element
        element = element.multiply_generator(ascents[0], Side.RIGHT)


def conjugate_generator_by_longest(system: RootSystem, s: int) -> int:
    """Index t with w0 s w0 = s_t."""
    w0 = longest_element(system)
    conjugate = multiply(multiply(w0, from_word(system, (s,))), w0)
    if conjugate.length != 1:
        raise IndexOutOfRange(f"Conjugate of s_{s} by w0 is not simple")
    return conjugate.word[0]


def enumerate_elements(
    system: RootSystem,
    max_order: int,
    generators: Optional[Iterable[int]] = None,
) -> List[CoxeterElement]:
    """
    All elements of W (or of the parabolic subgroup on `generators`), sorted
    by (length, canonical word). Breadth-first by length from the identity.
    """
    generators = GeneratorSubset.of(system, generators)
    start = identity(system)
    seen: Dict[Tuple[int, ...], CoxeterElement] = {start.root_action: start}
    elements: List[CoxeterElement] = [start]
    frontier = [start]

    while frontier:
        next_level: Dict[Tuple[int, ...], CoxeterElement] = {}
        for element in frontier:
            for s in generators:
                if element.has_descent(s, Side.RIGHT):
                    continue
                successor = element.multiply_generator(s, Side.RIGHT)
                if successor.root_action in seen or successor.root_action in next_level:
                    continue
                next_level[successor.root_action] = successor
                if len(seen) + len(next_level) > max_order:
                    raise GroupTooLarge(
                        f"{system.label}: group order exceeds the configured maximum {max_order}"
                    )
        frontier = sorted(next_level.values(), key=lambda element: element.word)
        seen.update(next_level)
        elements.extend(frontier)

    logger.debug(f"Enumerated {len(elements)} elements of {system.label}")
    return elements


def group_order(system: RootSystem, max_order: int) -> int:
    return len(enumerate_elements(system, max_order))


def to_permutation(w: CoxeterElement) -> Tuple[int, ...]:
    """One-line notation of w in S_{n+1}, s_i the adjacent transposition (i, i+1)."""
    if w.system.series != "A":
        raise NotTypeA(f"{w.system.label} is not of series A")
    one_line = list(range(1, w.system.rank + 2))
    for s in w.word:
        one_line[s - 1], one_line[s] = one_line[s], one_line[s - 1]
    return tuple(one_line)


__all__ = [
    "Side",
    "CoxeterElement",
    "GeneratorSubset",
    "format_word",
    "parse_word",
    "identity",
    "from_word",
    "multiply_generator",
    "length",
    "descents",
    "check_same_system",
    "multiply",
    "inverse",
    "is_reduced_word",
    "longest_element",
    "conjugate_generator_by_longest",
    "enumerate_elements",
    "group_order",
    "to_permutation",
]
