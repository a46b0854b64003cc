#!/usr/bin/env python3
"""
Schubert Smoothness (type A)
Permutation pattern containment and the 3412/4231 avoidance test.
"""

from dataclasses import dataclass
from typing import Sequence, Tuple, Union

from .coxeter import CoxeterElement, to_permutation
from .errors import ParseError, PatternLongerThanPermutation


def _check_one_line(values: Sequence[int]) -> Tuple[int, ...]:
    values = tuple(int(v) for v in values)
    if sorted(values) != list(range(1, len(values) + 1)):
        raise ParseError(f"{list(values)} is not a permutation of 1..{len(values)}")
    return values


@dataclass(frozen=True)
class Permutation:
    one_line: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "one_line", _check_one_line(self.one_line))

    def __len__(self) -> int:
        return len(self.one_line)

    def inverse(self) -> "Permutation":
        inverse = [0] * len(self.one_line)
        for position, value in enumerate(self.one_line, start=1):
            inverse[value - 1] = position
        return Permutation(tuple(inverse))


@dataclass(frozen=True)
class Pattern:
    one_line: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "one_line", _check_one_line(self.one_line))

    def __len__(self) -> int:
        return len(self.one_line)


# Read at call time; tests patch it to corrupt the table
FORBIDDEN_PATTERNS = (Pattern((3, 4, 1, 2)), Pattern((4, 2, 3, 1)))


def contains_pattern(
    perm: Union[Permutation, Sequence[int]],
    pat: Union[Pattern, Sequence[int]],
) -> bool:
    """
    True when some k positions of perm carry values in the relative order of pat.

    Depth-first over increasing positions, pruning a branch as soon as the
    chosen values disagree with the pattern's relative order.
    """
    values = perm.one_line if isinstance(perm, Permutation) else Permutation(tuple(perm)).one_line
    pattern = pat.one_line if isinstance(pat, Pattern) else Pattern(tuple(pat)).one_line
    m, k = len(values), len(pattern)
    if k > m:
        raise PatternLongerThanPermutation(f"Pattern of length {k} exceeds permutation of length {m}")

    chosen = []

    def consistent(candidate: int) -> bool:
        depth = len(chosen)
        for j, previous in enumerate(chosen):
            if (values[previous] < candidate) != (pattern[j] < pattern[depth]):
                return False
        return True

    def search(start: int) -> bool:
        depth = len(chosen)
        if depth == k:
            return True
        # leave room for the remaining pattern letters
        for position in range(start, m - (k - depth) + 1):
            if consistent(values[position]):
                chosen.append(position)
                if search(position + 1):
                    return True
                chosen.pop()
        return False

    return search(0)


def avoids_forbidden_patterns(perm: Union[Permutation, Sequence[int]]) -> bool:
    return not any(
        len(pattern) <= len(perm) and contains_pattern(perm, pattern)
        for pattern in FORBIDDEN_PATTERNS
    )


def is_smooth_type_a(w: CoxeterElement) -> bool:
    """The Schubert variety of w is smooth iff its permutation avoids 3412 and 4231."""
    return avoids_forbidden_patterns(Permutation(to_permutation(w)))


__all__ = [
    "Permutation",
    "Pattern",
    "FORBIDDEN_PATTERNS",
    "contains_pattern",
    "avoids_forbidden_patterns",
    "is_smooth_type_a",
]
