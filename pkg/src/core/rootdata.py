#!/usr/bin/env python3
"""
Root Data
Builds finite root systems from Cartan data and evaluates weights on coroots.

Conventions:
    a_ij = <alpha_i^vee, alpha_j>, so the simple reflection s_i acts on a root
    alpha = sum c_j alpha_j by s_i(alpha) = alpha - (sum_j c_j a_ij) alpha_i.
    The dual root system uses the transposed matrix.
    Weights are stored by their values on the simple coroots, as Fractions.
"""

import json
import logging
import re
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from .errors import (
    ArityMismatch,
    IndexOutOfRange,
    MalformedCartanMatrix,
    NonFiniteType,
    ParseError,
)

logger = logging.getLogger(__name__)

Matrix = Tuple[Tuple[int, ...], ...]
RootVector = Tuple[int, ...]

SERIES = ("A", "B", "C", "D", "custom")
DEFAULT_MAX_ROOTS = 10000

_SERIES_PATTERN = re.compile(r"^\s*([ABCDabcd])\s*(\d+)\s*$")


def standard_cartan_matrix(series: str, rank: int) -> Matrix:
    """Return the standard Cartan matrix of a classical series."""
    series = series.upper()
    minimum = {"A": 1, "B": 2, "C": 2, "D": 3}
    if series not in minimum:
        raise MalformedCartanMatrix(f"Unknown series: {series}")
    if rank < minimum[series]:
        raise MalformedCartanMatrix(f"{series}{rank}: rank must be at least {minimum[series]}")

    rows = [[0] * rank for _ in range(rank)]
    for i in range(rank):
        rows[i][i] = 2

    if series == "D":
        # chain 1 - 2 - ... - (n-1), node n attached to n-2
        for i in range(rank - 2):
            rows[i][i + 1] = rows[i + 1][i] = -1
        rows[rank - 3][rank - 1] = rows[rank - 1][rank - 3] = -1
    else:
        for i in range(rank - 1):
            rows[i][i + 1] = rows[i + 1][i] = -1
        if series == "B":
            # alpha_n short
            rows[rank - 1][rank - 2] = -2
        elif series == "C":
            # alpha_n long
            rows[rank - 2][rank - 1] = -2

    return tuple(tuple(row) for row in rows)


def _integer_entry(entry) -> int:
    if isinstance(entry, bool):
        raise MalformedCartanMatrix(f"Cartan matrix entry {entry!r} is not an integer")
    if isinstance(entry, int):
        return entry
    if isinstance(entry, Fraction) and entry.denominator == 1:
        return int(entry)
    raise MalformedCartanMatrix(f"Cartan matrix entry {entry!r} is not an integer")


@dataclass(frozen=True)
class CartanDatum:
    """Series label, rank and Cartan matrix of a root system."""
    series: str
    rank: int
    cartan_matrix: Matrix

    def __post_init__(self):
        matrix = tuple(tuple(_integer_entry(entry) for entry in row) for row in self.cartan_matrix)
        object.__setattr__(self, "cartan_matrix", matrix)

        if self.series not in SERIES:
            raise MalformedCartanMatrix(f"Unknown series: {self.series}")
        if self.rank < 1:
            raise MalformedCartanMatrix("Rank must be a positive integer")
        if len(matrix) != self.rank or any(len(row) != self.rank for row in matrix):
            raise MalformedCartanMatrix(f"Cartan matrix must be {self.rank}x{self.rank}")

        for i in range(self.rank):
            if matrix[i][i] != 2:
                raise MalformedCartanMatrix(f"Diagonal entry a_{i + 1}{i + 1} must be 2")
            for j in range(self.rank):
                if i == j:
                    continue
                if matrix[i][j] > 0:
                    raise MalformedCartanMatrix(f"Off-diagonal entry a_{i + 1}{j + 1} must be <= 0")
                if (matrix[i][j] == 0) != (matrix[j][i] == 0):
                    raise MalformedCartanMatrix(f"a_{i + 1}{j + 1} = 0 must match a_{j + 1}{i + 1} = 0")

        if self.series != "custom" and matrix != standard_cartan_matrix(self.series, self.rank):
            raise MalformedCartanMatrix(f"Matrix is not the standard {self.series}{self.rank} Cartan matrix")

    @classmethod
    def from_series(cls, series: str, rank: int) -> "CartanDatum":
        series = series.upper()
        return cls(series=series, rank=rank, cartan_matrix=standard_cartan_matrix(series, rank))

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence[int]]) -> "CartanDatum":
        rows = tuple(tuple(row) for row in matrix)
        return cls(series="custom", rank=len(rows), cartan_matrix=rows)

    @property
    def label(self) -> str:
        """Stable text form: "A3" for a series, the JSON matrix otherwise."""
        if self.series == "custom":
            return json.dumps([list(row) for row in self.cartan_matrix], separators=(",", ":"))
        return f"{self.series}{self.rank}"

    def transposed(self) -> Matrix:
        return tuple(zip(*self.cartan_matrix))


def parse_cartan_datum(text: str) -> CartanDatum:
    """
    Parse a system spec: "A2", "b3", a JSON object with "cartan_matrix",
    or a path to a JSON file holding such an object.
    """
    if text is None or not str(text).strip():
        raise ParseError("Empty system spec")
    text = str(text).strip()

    match = _SERIES_PATTERN.match(text)
    if match:
        series, rank = match.group(1).upper(), int(match.group(2))
        if rank < 1:
            raise ParseError(f"{text}: rank must be >= 1")
        try:
            return CartanDatum.from_series(series, rank)
        except MalformedCartanMatrix as e:
            raise ParseError(str(e)) from e

    payload = text
    if not text.startswith("{"):
        path = Path(text)
        if not path.is_file():
            raise ParseError(f"Unrecognized system spec: {text}")
        try:
            payload = path.read_text(encoding="utf-8")
        except (OSError, UnicodeDecodeError) as e:
            raise ParseError(f"Cannot read system file {text}: {e}") from e

    try:
        data = json.loads(payload)
        matrix = data["cartan_matrix"]
    except (json.JSONDecodeError, KeyError, TypeError) as e:
        raise ParseError(f"Expected a JSON object with key 'cartan_matrix': {e}") from e

    if not isinstance(matrix, list) or not matrix or not all(isinstance(row, list) for row in matrix):
        raise ParseError("'cartan_matrix' must be a non-empty list of integer rows")
    if not all(isinstance(entry, int) and not isinstance(entry, bool) for row in matrix for entry in row):
        raise ParseError("'cartan_matrix' entries must be integers")

    return CartanDatum.from_matrix(matrix)


def _pairing(matrix: Matrix, vector: RootVector, i: int) -> int:
    """<alpha_i^vee, vector> for vector in simple-root coordinates."""
    return sum(c * a for c, a in zip(vector, matrix[i]))


def _reflect(matrix: Matrix, vector: RootVector, i: int) -> RootVector:
    pairing = _pairing(matrix, vector, i)
    return tuple(c - pairing if k == i else c for k, c in enumerate(vector))


def _unit(rank: int, i: int) -> RootVector:
    return tuple(1 if k == i else 0 for k in range(rank))


def _close(matrix: Matrix, max_roots: int) -> Dict[RootVector, Optional[Tuple[RootVector, int]]]:
    """
    Generate the positive roots by closing the simple roots under simple reflections.

    Returns a mapping root -> (parent root, reflection index) recording how each
    non-simple root was reached; simple roots map to None.
    """
    rank = len(matrix)
    found: Dict[RootVector, Optional[Tuple[RootVector, int]]] = {}
    queue = deque()
    for i in range(rank):
        simple = _unit(rank, i)
        found[simple] = None
        queue.append(simple)

    while queue:
        root = queue.popleft()
        for i in range(rank):
            if root == _unit(rank, i):
                continue
            image = _reflect(matrix, root, i)
            if image in found:
                continue
            if any(c < 0 for c in image):
                # only happens for non-finite data
                raise NonFiniteType(f"Reflection produced a mixed-sign vector {image}")
            found[image] = (root, i)
            if len(found) > max_roots:
                raise NonFiniteType(f"Positive-root closure exceeded {max_roots} roots")
            queue.append(image)

    return found


def _height_key(root: RootVector):
    return (sum(root), tuple(-c for c in root))


@dataclass(frozen=True)
class Weight:
    """A weight given by its values on the simple coroots."""
    coords: Tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in self.coords))

    @classmethod
    def of(cls, *values: Union[int, str, Fraction]) -> "Weight":
        return cls(tuple(Fraction(v) for v in values))

    @property
    def rank(self) -> int:
        return len(self.coords)

    def _check_rank(self, other: "Weight"):
        if other.rank != self.rank:
            raise ArityMismatch(f"Weights of rank {self.rank} and {other.rank} cannot be combined")

    def __neg__(self) -> "Weight":
        return Weight(tuple(-c for c in self.coords))

    def __add__(self, other: "Weight") -> "Weight":
        self._check_rank(other)
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Weight") -> "Weight":
        self._check_rank(other)
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.coords) + ")"

    def to_json(self) -> List[str]:
        return [str(c) for c in self.coords]


def parse_weight(text: str) -> Weight:
    """Parse "c1,c2,..." with integer or rational entries such as -1/2."""
    try:
        return Weight(tuple(Fraction(part.strip()) for part in str(text).split(",")))
    except (ValueError, ZeroDivisionError) as e:
        raise ParseError(f"Malformed weight '{text}': {e}") from e


@dataclass(frozen=True)
class RootSystem:
    """
    Positive roots and coroots of a finite root system.

    positive_coroots[k] is the coroot of positive_roots[k].
    """
    datum: CartanDatum
    positive_roots: Tuple[RootVector, ...]
    positive_coroots: Tuple[RootVector, ...]
    root_index: Dict[RootVector, int] = field(compare=False, repr=False)

    @property
    def rank(self) -> int:
        return self.datum.rank

    @property
    def series(self) -> str:
        return self.datum.series

    @property
    def label(self) -> str:
        return self.datum.label

    @property
    def cartan_matrix(self) -> Matrix:
        return self.datum.cartan_matrix

    @property
    def num_positive(self) -> int:
        return len(self.positive_roots)

    @property
    def simple_roots(self) -> Tuple[RootVector, ...]:
        return self.positive_roots[:self.rank]

    @property
    def dim_flag(self) -> int:
        """Complex dimension of the full flag space X = X0 x X0^c."""
        return 2 * self.num_positive

    def is_simply_laced(self) -> bool:
        return all(
            entry in (0, -1)
            for i, row in enumerate(self.cartan_matrix)
            for j, entry in enumerate(row)
            if i != j
        )

    def highest_root(self) -> RootVector:
        return max(self.positive_roots, key=_height_key)

    def reflect(self, root: RootVector, i: int) -> RootVector:
        """s_i applied to a root given in simple-root coordinates (0-based i)."""
        if not 0 <= i < self.rank:
            raise IndexOutOfRange(f"Generator index {i + 1} outside 1..{self.rank}")
        return _reflect(self.cartan_matrix, root, i)

    @cached_property
    def reflection_tables(self) -> Tuple[Tuple[int, ...], ...]:
        """
        Signed action of each simple reflection on the positive roots.

        Entry tables[i][k] is +(m+1) when s_i(alpha_k) = alpha_m and -(m+1)
        when s_i(alpha_k) = -alpha_m.
        """
        tables = []
        for i in range(self.rank):
            row = []
            for k, root in enumerate(self.positive_roots):
                image = _reflect(self.cartan_matrix, root, i)
                if k == i:
                    row.append(-(i + 1))
                else:
                    row.append(self.root_index[image] + 1)
            tables.append(tuple(row))
        return tuple(tables)

    # Weight predicates

    def rho(self) -> Weight:
        """Half-sum of the positive roots: value 1 on every simple coroot."""
        return Weight(tuple(Fraction(1) for _ in range(self.rank)))

    def _check_weight(self, weight: Weight):
        if weight.rank != self.rank:
            raise ArityMismatch(f"Weight has {weight.rank} coordinates, system rank is {self.rank}")

    def coroot_value(self, weight: Weight, coroot_index: int) -> Fraction:
        """Value of the weight on positive_coroots[coroot_index]."""
        self._check_weight(weight)
        if not 0 <= coroot_index < self.num_positive:
            raise IndexOutOfRange(f"Coroot index {coroot_index} outside 0..{self.num_positive - 1}")
        expansion = self.positive_coroots[coroot_index]
        return sum((c * value for c, value in zip(expansion, weight.coords)), Fraction(0))

    def coroot_values(self, weight: Weight) -> List[Fraction]:
        return [self.coroot_value(weight, k) for k in range(self.num_positive)]

    def is_integral(self, weight: Weight) -> bool:
        return all(value.denominator == 1 for value in self.coroot_values(weight))

    def is_regular(self, weight: Weight) -> bool:
        return all(value != 0 for value in self.coroot_values(weight))

    def is_antidominant(self, weight: Weight) -> bool:
        """No positive-coroot value lies in {1, 2, ...}; zero is allowed."""
        return not any(value.denominator == 1 and value > 0 for value in self.coroot_values(weight))

    def shift_to_d_module_parameter(self, mu: Weight) -> Weight:
        """lambda = mu - rho."""
        self._check_weight(mu)
        return mu - self.rho()


def build_root_system(datum: CartanDatum, max_roots: int = DEFAULT_MAX_ROOTS) -> RootSystem:
    """Close the simple roots and coroots under simple reflections."""
    matrix = datum.cartan_matrix
    transposed = datum.transposed()

    parents = _close(matrix, max_roots)
    roots = sorted(parents, key=_height_key)

    # each coroot replays the reflection path of its root in the dual system
    coroot_of: Dict[RootVector, RootVector] = {}

    def coroot(root: RootVector) -> RootVector:
        if root not in coroot_of:
            parent = parents[root]
            if parent is None:
                coroot_of[root] = root
            else:
                parent_root, i = parent
                coroot_of[root] = _reflect(transposed, coroot(parent_root), i)
        return coroot_of[root]

    for root in roots:
        coroot(root)
    coroots = tuple(coroot_of[root] for root in roots)

    logger.debug(f"Built {datum.label}: {len(roots)} positive roots")

    return RootSystem(
        datum=datum,
        positive_roots=tuple(roots),
        positive_coroots=coroots,
        root_index={root: k for k, root in enumerate(roots)},
    )


def dual_positive_roots(datum: CartanDatum, max_roots: int = DEFAULT_MAX_ROOTS) -> List[RootVector]:
    """Positive roots of the dual system, generated independently from the transposed matrix."""
    return sorted(_close(datum.transposed(), max_roots), key=_height_key)


def expected_positive_root_count(series: str, rank: int) -> Optional[int]:
    """|positive roots| for the classical series, None for custom data."""
    counts = {
        "A": rank * (rank + 1) // 2,
        "B": rank * rank,
        "C": rank * rank,
        "D": rank * (rank - 1),
    }
    return counts.get(series)


def system_from_spec(text: str, max_roots: int = DEFAULT_MAX_ROOTS) -> RootSystem:
    return build_root_system(parse_cartan_datum(text), max_roots=max_roots)


__all__ = [
    "CartanDatum",
    "RootSystem",
    "Weight",
    "standard_cartan_matrix",
    "parse_cartan_datum",
    "parse_weight",
    "build_root_system",
    "dual_positive_roots",
    "expected_positive_root_count",
    "system_from_spec",
]
