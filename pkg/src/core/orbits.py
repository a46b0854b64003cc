#!/usr/bin/env python3
"""
Orbit Classification
Dimensions, vanishing numbers, invariant open sets, parabolicity, smoothness
and realization verdicts for the W-indexed orbits on the full flag space.

For a complex group X = X0 x X0^c, N = |positive roots| = dim X0 and the
orbit labelled w has dim Q_w = N + l(w) and vanishing number q = N - l(w).
"""

import logging
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from typing import Any, Callable, Dict, FrozenSet, Iterable, List, Optional, Tuple

from .bruhat import BruhatInterval, bruhat_leq, is_palindromic, lower_interval
from .coxeter import (
    CoxeterElement,
    Side,
    check_same_system,
    descents,
    enumerate_elements,
    longest_element,
    multiply,
    to_permutation,
)
from .errors import ArityMismatch, DegreeOutOfRange, IndexOutOfRange, MixedSystems, NonPositivePartition
from .rootdata import RootSystem, Weight
from .schubert import is_smooth_type_a

logger = logging.getLogger(__name__)

IntervalProvider = Callable[[CoxeterElement], BruhatInterval]


class OrbitSide(str, Enum):
    K_ORBIT = "k_orbit"
    G0_ORBIT = "g0_orbit"


class Smoothness(str, Enum):
    TRUE = "true"
    FALSE = "false"
    RATIONAL_ONLY = "rational_only"

    def to_json(self):
        if self is Smoothness.RATIONAL_ONLY:
            return self.value
        return self is Smoothness.TRUE


class Verdict(str, Enum):
    IRREDUCIBLE_REALIZATION = "IRREDUCIBLE_REALIZATION"
    NOT_GUARANTEED_SINGULAR = "NOT_GUARANTEED_SINGULAR"
    RATIONAL_ONLY_CAVEAT = "RATIONAL_ONLY_CAVEAT"


class Region(str, Enum):
    ORBIT = "orbit"
    OPEN_SET = "open_set"


RECORD_FIELDS = (
    "word",
    "one_line",
    "length",
    "dim_k_orbit",
    "vanishing_number",
    "interval_size",
    "poincare",
    "parabolic",
    "rationally_smooth",
    "smooth",
    "verdict",
)


@dataclass(frozen=True)
class OrbitDescriptor:
    w: CoxeterElement
    length: int
    dim_k_orbit: int
    vanishing_number: int
    dim_flag: int
    interval_size: int


@dataclass(frozen=True)
class ClassificationRecord:
    descriptor: OrbitDescriptor
    poincare: Tuple[int, ...]
    parabolic: bool
    rationally_smooth: bool
    smooth: Smoothness
    verdict: Verdict

    @property
    def w(self) -> CoxeterElement:
        return self.descriptor.w

    def to_dict(self) -> Dict[str, Any]:
        """Stable serialized form; key order is part of the output contract."""
        w = self.descriptor.w
        one_line = list(to_permutation(w)) if w.system.series == "A" else None
        return {
            "word": w.word_string,
            "one_line": one_line,
            "length": self.descriptor.length,
            "dim_k_orbit": self.descriptor.dim_k_orbit,
            "vanishing_number": self.descriptor.vanishing_number,
            "interval_size": self.descriptor.interval_size,
            "poincare": list(self.poincare),
            "parabolic": self.parabolic,
            "rationally_smooth": self.rationally_smooth,
            "smooth": self.smooth.to_json(),
            "verdict": self.verdict.value,
        }


@dataclass(frozen=True)
class RealizationDescriptor:
    degree: int
    weight: Weight
    region: Region = Region.OPEN_SET


@dataclass(frozen=True)
class InductionPrediction:
    n1: int
    n2: int
    factor_count: int
    irreducible: bool


@dataclass(frozen=True)
class MaximalParabolicSetup:
    """
    Orbit bookkeeping for the maximal parabolic obtained by dropping generator k.

    fiber_labels are the orbits in the closed set pi^-1(C) (w0 times W_J);
    open_orbit_label is the remaining vanishing-number-one orbit and
    open_set_labels the orbits of the smallest invariant open set containing it.
    """
    removed_generator: int
    levi_generators: Tuple[int, ...]
    fiber_labels: Tuple[CoxeterElement, ...]
    fiber_vanishing_one: Tuple[CoxeterElement, ...]
    open_orbit_label: CoxeterElement
    open_set_labels: FrozenSet[CoxeterElement]
    smooth: Smoothness
    partition: Optional[Tuple[int, int]] = None
    prediction: Optional[InductionPrediction] = None


@dataclass(frozen=True)
class ClassificationSummary:
    total: int
    parabolic: int
    smooth: int
    rational_only: int

    @property
    def line(self) -> str:
        line = f"{self.total} orbits, {self.parabolic} parabolic, {self.smooth} smooth"
        if self.rational_only:
            line += f", {self.rational_only} rational-only"
        return line


def _check_membership(w: CoxeterElement, system: RootSystem):
    if w.system.datum != system.datum:
        raise MixedSystems(f"Element of {w.system.label} used with system {system.label}")


def orbit_descriptor(
    w: CoxeterElement,
    system: RootSystem,
    interval: Optional[BruhatInterval] = None,
) -> OrbitDescriptor:
    _check_membership(w, system)
    if interval is None:
        interval = lower_interval(w)
    n = system.num_positive
    return OrbitDescriptor(
        w=w,
        length=w.length,
        dim_k_orbit=n + w.length,
        vanishing_number=n - w.length,
        dim_flag=system.dim_flag,
        interval_size=interval.size,
    )


def u_w_members(w: CoxeterElement) -> FrozenSet[CoxeterElement]:
    """Labels of the G0-orbits making up U_w; w labels the unique closed one."""
    return lower_interval(w).members


def closure_order(u: CoxeterElement, w: CoxeterElement, side: OrbitSide = OrbitSide.K_ORBIT) -> bool:
    """
    k_orbit: Q_u lies in the closure of Q_w (u <= w).
    g0_orbit: S_u lies in the closure of S_w (w <= u); duality reverses the order.
    """
    check_same_system(u, w)
    if OrbitSide(side) is OrbitSide.K_ORBIT:
        return bruhat_leq(u, w)
    return bruhat_leq(w, u)


def is_parabolic(w: CoxeterElement) -> bool:
    """w is the longest element of the parabolic subgroup on its right descents."""
    return w == longest_element(w.system, descents(w, Side.RIGHT))


def smoothness(w: CoxeterElement, interval: BruhatInterval) -> Tuple[bool, Smoothness]:
    """
    (rationally_smooth, smooth) for the closure of Q_w.

    Series A uses pattern avoidance, series D the simply-laced equivalence with
    rational smoothness; other series can only certify rational smoothness.
    """
    rationally_smooth = is_palindromic(interval)
    series = w.system.series
    if series == "A":
        smooth = Smoothness.TRUE if is_smooth_type_a(w) else Smoothness.FALSE
    elif series == "D":
        smooth = Smoothness.TRUE if rationally_smooth else Smoothness.FALSE
    else:
        smooth = Smoothness.RATIONAL_ONLY if rationally_smooth else Smoothness.FALSE
    return rationally_smooth, smooth


def verdict_for(smooth: Smoothness) -> Verdict:
    if smooth is Smoothness.TRUE:
        return Verdict.IRREDUCIBLE_REALIZATION
    if smooth is Smoothness.RATIONAL_ONLY:
        return Verdict.RATIONAL_ONLY_CAVEAT
    return Verdict.NOT_GUARANTEED_SINGULAR


def classify(
    w: CoxeterElement,
    system: RootSystem,
    interval: Optional[BruhatInterval] = None,
) -> ClassificationRecord:
    """Assemble dimensions, Poincaré data, parabolicity, smoothness and the verdict."""
    _check_membership(w, system)
    if interval is None:
        interval = lower_interval(w)
    rationally_smooth, smooth = smoothness(w, interval)
    return ClassificationRecord(
        descriptor=orbit_descriptor(w, system, interval),
        poincare=interval.poincare,
        parabolic=is_parabolic(w),
        rationally_smooth=rationally_smooth,
        smooth=smooth,
        verdict=verdict_for(smooth),
    )


def classify_all(
    system: RootSystem,
    elements: Iterable[CoxeterElement],
    workers: int = 1,
    interval_provider: Optional[IntervalProvider] = None,
) -> List[ClassificationRecord]:
    """Classify every element, preserving input order."""
    provider = interval_provider or lower_interval
    elements = list(elements)

    def run(w: CoxeterElement) -> ClassificationRecord:
        return classify(w, system, provider(w))

    if workers <= 1:
        return [run(w) for w in elements]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(run, elements))


def summarize(records: Iterable[ClassificationRecord]) -> ClassificationSummary:
    records = list(records)
    return ClassificationSummary(
        total=len(records),
        parabolic=sum(1 for r in records if r.parabolic),
        smooth=sum(1 for r in records if r.smooth is Smoothness.TRUE),
        rational_only=sum(1 for r in records if r.smooth is Smoothness.RATIONAL_ONLY),
    )


def induction_prediction(n1: int, n2: int) -> InductionPrediction:
    """
    Predicted composition-factor count min(n1, n2) for the maximal parabolic
    with Levi GL(n1) x GL(n2); irreducible exactly when one block has size 1.
    """
    if n1 < 1 or n2 < 1:
        raise NonPositivePartition(f"Partition parts must be positive, got ({n1}, {n2})")
    factor_count = min(n1, n2)
    return InductionPrediction(n1=n1, n2=n2, factor_count=factor_count, irreducible=factor_count == 1)


def vanishing_census(system: RootSystem, elements: Iterable[CoxeterElement]) -> Dict[int, int]:
    """Number of orbits with each vanishing number."""
    n = system.num_positive
    counts = Counter(n - w.length for w in elements)
    return dict(sorted(counts.items()))


def count_vanishing_one_orbits(system: RootSystem, max_order: int) -> int:
    n = system.num_positive
    return sum(1 for w in enumerate_elements(system, max_order) if w.length == n - 1)


def closed_orbit_label(system: RootSystem) -> CoxeterElement:
    """w0: the unique orbit with vanishing number 0."""
    return longest_element(system)


def maximal_parabolic_setup(system: RootSystem, k: int, max_order: int) -> MaximalParabolicSetup:
    if not 1 <= k <= system.rank:
        raise IndexOutOfRange(f"Generator {k} outside 1..{system.rank}")

    levi = tuple(s for s in range(1, system.rank + 1) if s != k)
    w0 = longest_element(system)
    n = system.num_positive

    fiber = tuple(
        sorted(
            (multiply(w0, v) for v in enumerate_elements(system, max_order, generators=levi)),
            key=lambda u: (u.length, u.word),
        )
    )
    open_orbit = w0.multiply_generator(k, Side.RIGHT)
    interval = lower_interval(open_orbit)
    _, smooth = smoothness(open_orbit, interval)

    partition = prediction = None
    if system.series == "A":
        partition = (k, system.rank + 1 - k)
        prediction = induction_prediction(*partition)

    return MaximalParabolicSetup(
        removed_generator=k,
        levi_generators=levi,
        fiber_labels=fiber,
        fiber_vanishing_one=tuple(u for u in fiber if n - u.length == 1),
        open_orbit_label=open_orbit,
        open_set_labels=interval.members,
        smooth=smooth,
        partition=partition,
        prediction=prediction,
    )


def serre_dual(r: RealizationDescriptor, system: RootSystem) -> RealizationDescriptor:
    """(p, lambda) -> (dim X - p, -lambda) with dim X = 2N."""
    dim_flag = system.dim_flag
    if not 0 <= r.degree <= dim_flag:
        raise DegreeOutOfRange(f"Degree {r.degree} outside 0..{dim_flag}")
    if r.weight.rank != system.rank:
        raise ArityMismatch(f"Weight has {r.weight.rank} coordinates, system rank is {system.rank}")
    return RealizationDescriptor(degree=dim_flag - r.degree, weight=-r.weight, region=r.region)


__all__ = [
    "OrbitSide",
    "Smoothness",
    "Verdict",
    "Region",
    "RECORD_FIELDS",
    "OrbitDescriptor",
    "ClassificationRecord",
    "RealizationDescriptor",
    "InductionPrediction",
    "MaximalParabolicSetup",
    "ClassificationSummary",
    "orbit_descriptor",
    "u_w_members",
    "closure_order",
    "is_parabolic",
    "smoothness",
    "verdict_for",
    "classify",
    "classify_all",
    "summarize",
    "induction_prediction",
    "vanishing_census",
    "count_vanishing_one_orbits",
    "closed_orbit_label",
    "maximal_parabolic_setup",
    "serre_dual",
]
