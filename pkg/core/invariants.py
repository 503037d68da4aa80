"""
Invariant Computation

Drives full localization computations: picks generic torus specializations,
sums graph contributions over every fixed-point class, checks that independent
specializations agree exactly and reports the common value.
"""

import logging
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

from tqdm import tqdm

from .errors import DisagreementError, RetryExhausted, SpecializationDegenerate
from .exactmath import format_rational, rational_to_json
from .graph_cache import GraphCache
from .graphs import GraphClass, enumerate_fixed_graphs
from .localization import ClassSelector, TorusSpec, graph_contribution

logger = logging.getLogger(__name__)

SAMPLE_BOUND = 10 ** 6
DEFAULT_RETRY_BUDGET = 32
DEFAULT_MIN_AGREEMENT = 2

# Published values: contact curves meeting 2d+1 lines, all curves meeting 4d lines.
REFERENCE_VALUES: Dict[str, Dict[int, int]] = {
    'contact': {1: 2, 2: 40, 3: 4160, 4: 1089024},
    'gw_lines': {1: 2, 2: 92, 3: 80160, 4: 383306880},
}


class InvariantKind(Enum):
    CONTACT = 'contact'
    GW_LINES = 'gw_lines'
    CUSTOM = 'custom'

    @classmethod
    def parse(cls, value: str) -> "InvariantKind":
        """Accepts 'gw-lines' as well as 'gw_lines'."""
        return cls(value.strip().lower().replace('-', '_'))


@dataclass(frozen=True)
class InvariantRequest:
    """What to integrate over the moduli space of degree-d stable maps."""
    degree: int
    kind: InvariantKind = InvariantKind.CONTACT
    custom_selector: Optional[ClassSelector] = None

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError(f"degree must be positive, got {self.degree}")
        if self.kind is InvariantKind.CUSTOM and self.custom_selector is None:
            raise ValueError("a custom invariant needs an explicit class selector")

    def selector(self) -> ClassSelector:
        if self.kind is InvariantKind.CONTACT:
            return ClassSelector.contact(self.degree)
        if self.kind is InvariantKind.GW_LINES:
            return ClassSelector.gw_lines(self.degree)
        return self.custom_selector


@dataclass
class InvariantResult:
    """Outcome of one computation."""
    degree: int
    kind: InvariantKind
    value: Fraction
    graph_class_count: int
    specializations_used: List[TorusSpec] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def is_integer(self) -> bool:
        return self.value.denominator == 1

    @property
    def reference(self) -> Optional[int]:
        return REFERENCE_VALUES.get(self.kind.value, {}).get(self.degree)

    @property
    def matches_reference(self) -> Optional[bool]:
        reference = self.reference
        return None if reference is None else self.value == reference

    def to_dict(self, timing: bool = True) -> Dict[str, Any]:
        result: Dict[str, Any] = {
            'degree': self.degree,
            'kind': self.kind.value,
            'value': rational_to_json(self.value),
            'is_integer': self.is_integer,
            'graph_classes': self.graph_class_count,
            'specializations': [spec.as_strings() for spec in self.specializations_used],
        }
        if self.reference is not None:
            result['reference'] = self.reference
            result['matches_reference'] = self.matches_reference
        if timing:
            result['elapsed_ms'] = round(self.elapsed * 1000, 3)
        return result

    def __str__(self) -> str:
        return f"{self.kind.value}(d={self.degree}) = {format_rational(self.value)}"


def sample_specialization(seed: int, attempt: int) -> TorusSpec:
    """Four distinct integers in [-10^6, 10^6], fixed by (seed, attempt)."""
    rng = random.Random(f"{seed}:{attempt}")
    return TorusSpec.from_values(rng.sample(range(-SAMPLE_BOUND, SAMPLE_BOUND + 1), 4))


def _sum_chunk(chunk: Sequence[GraphClass], spec: TorusSpec, selector: ClassSelector) -> Fraction:
    total = Fraction(0)
    for graph_class in chunk:
        total += graph_contribution(graph_class, spec, selector)
    return total


def _chunks(items: Sequence[GraphClass], count: int) -> List[Sequence[GraphClass]]:
    size = max(1, -(-len(items) // count))
    return [items[i:i + size] for i in range(0, len(items), size)]


def sum_contributions(
    classes: Sequence[GraphClass],
    spec: TorusSpec,
    selector: ClassSelector,
    threads: int = 1,
    show_progress: bool = False,
) -> Fraction:
    """
    Sum graph contributions at one specialization.

    With threads > 1 the classes are split into chunks summed in worker
    processes; exact arithmetic makes the total independent of the split.

    Raises:
        SpecializationDegenerate: some denominator vanishes at spec
    """
    if threads <= 1 or len(classes) < 2:
        total = Fraction(0)
        for graph_class in tqdm(classes, desc="Graph contributions", unit=" graph",
                                disable=not show_progress, leave=False):
            total += graph_contribution(graph_class, spec, selector)
        return total

    chunks = _chunks(list(classes), threads * 4)
    total = Fraction(0)
    with ProcessPoolExecutor(max_workers=threads) as pool:
        futures = [pool.submit(_sum_chunk, chunk, spec, selector) for chunk in chunks]
        with tqdm(total=len(classes), desc="Graph contributions", unit=" graph",
                  disable=not show_progress, leave=False) as progress_bar:
            for chunk, future in zip(chunks, futures):
                total += future.result()
                progress_bar.update(len(chunk))
    return total


def compute(
    request: InvariantRequest,
    seed: int = 0,
    min_agreement: int = DEFAULT_MIN_AGREEMENT,
    *,
    classes: Optional[Sequence[GraphClass]] = None,
    cache: Optional[GraphCache] = None,
    threads: int = 1,
    retry_budget: int = DEFAULT_RETRY_BUDGET,
    explicit_specs: Sequence[TorusSpec] = (),
    show_progress: bool = False,
) -> InvariantResult:
    """
    Evaluate an invariant by localization at several specializations.

    Explicit specializations are used first and never replaced; the remaining
    ones are sampled from the seed. Degenerate samples are discarded and
    resampled.

    Raises:
        SpecializationDegenerate: an explicit specialization is degenerate
        RetryExhausted: more than retry_budget degenerate samples
        DisagreementError: two specializations gave different sums
    """
    if min_agreement < 2:
        raise ValueError(f"min_agreement must be at least 2, got {min_agreement}")

    start = time.perf_counter()
    selector = request.selector()
    if not selector.is_balanced(request.degree):
        logger.warning(f"Class selector {selector} is not of top degree for d={request.degree}; "
                       f"the sum depends on the specialization")

    if classes is None:
        classes = cache.get_graphs(request.degree) if cache is not None else enumerate_fixed_graphs(request.degree)
    logger.info(f"Computing {request.kind.value} for d={request.degree} over {len(classes)} graph classes")

    used: List[TorusSpec] = []
    values: List[Fraction] = []

    def record(spec: TorusSpec, value: Fraction):
        if values and value != values[0]:
            raise DisagreementError(
                f"specialization {spec.as_strings()} gives {format_rational(value)}, "
                f"but {used[0].as_strings()} gives {format_rational(values[0])}"
            )
        used.append(spec)
        values.append(value)

    for spec in explicit_specs:
        record(spec, sum_contributions(classes, spec, selector, threads, show_progress))

    attempt = 0
    failures = 0
    while len(values) < min_agreement:
        spec = sample_specialization(seed, attempt)
        attempt += 1
        try:
            value = sum_contributions(classes, spec, selector, threads, show_progress)
        except SpecializationDegenerate as e:
            failures += 1
            logger.warning(f"Discarding degenerate specialization {spec.as_strings()}: {e}")
            if failures > retry_budget:
                raise RetryExhausted(
                    f"{failures} degenerate specializations for d={request.degree} (budget {retry_budget})"
                ) from e
            continue
        logger.debug(f"Specialization {spec.as_strings()} -> {format_rational(value)}")
        record(spec, value)

    result = InvariantResult(
        degree=request.degree,
        kind=request.kind,
        value=values[0],
        graph_class_count=len(classes),
        specializations_used=used,
        elapsed=time.perf_counter() - start,
    )
    if result.matches_reference is False:
        logger.error(f"{result} differs from the published value {result.reference}")
    elif not result.is_integer:
        logger.info(f"{result} is not an integer")
    return result


class InvariantEngine:
    """
    Service wrapper holding the graph cache and engine settings
    """

    def __init__(self, cache: Optional[GraphCache] = None, seed: int = 0,
                 min_agreement: int = DEFAULT_MIN_AGREEMENT, retry_budget: int = DEFAULT_RETRY_BUDGET,
                 threads: int = 1, show_progress: bool = False):
        self.cache = cache or GraphCache(enabled=False)
        self.seed = seed
        self.min_agreement = min_agreement
        self.retry_budget = retry_budget
        self.threads = threads
        self.show_progress = show_progress

    @classmethod
    def from_config(cls, config) -> "InvariantEngine":
        engine = config.engine
        return cls(
            cache=GraphCache(config.cache.cache_dir, config.cache.enabled),
            seed=engine.seed,
            min_agreement=engine.min_agreement,
            retry_budget=engine.retry_budget,
            threads=engine.threads,
            show_progress=engine.show_progress,
        )

    def graphs(self, degree: int) -> List[GraphClass]:
        return self.cache.get_graphs(degree)

    def compute(self, request: InvariantRequest, explicit_specs: Sequence[TorusSpec] = (),
                min_agreement: Optional[int] = None) -> InvariantResult:
        return compute(
            request,
            self.seed,
            min_agreement or self.min_agreement,
            classes=self.graphs(request.degree),
            threads=self.threads,
            retry_budget=self.retry_budget,
            explicit_specs=explicit_specs,
            show_progress=self.show_progress,
        )
