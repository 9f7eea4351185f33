"""Classical emulation of Grover-style search with exact query-cost accounting.

The primitives scan their whole domain (that is the emulation), but charge the
ledger what an ideal quantum searcher would pay: batched search over a domain
of size l that finds k marked items costs ceil(sqrt(k*l)) plus a ceil(sqrt(l))
emptiness certificate; a single-item search costs ceil(sqrt(l / k)).  Charges
are exact integers scaled by a rational cost constant, so ledger totals never
see float drift.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Callable, Optional, Sequence, Union

GROVER_BATCH = "grover_batch"
GROVER_EMPTY_CHECK = "grover_empty_check"
COUNTING = "counting"

Charge = Union[int, Fraction]


def ceil_sqrt(x: int) -> int:
    """Smallest integer t with t*t >= x (x must be a nonnegative integer)."""
    if x < 0:
        raise ValueError(f"ceil_sqrt of negative value {x}")
    if x == 0:
        return 0
    return math.isqrt(x - 1) + 1


def ceil_sqrt_ratio(num: int, den: int) -> int:
    """Smallest integer t with t*t*den >= num, for num >= 0, den >= 1."""
    if den < 1 or num < 0:
        raise ValueError(f"bad ratio {num}/{den}")
    if num == 0:
        return 0
    t = math.isqrt(num // den)
    while t * t * den < num:
        t += 1
    return t


def ceil_cbrt(x: int) -> int:
    """Smallest integer t with t**3 >= x (x must be a nonnegative integer)."""
    if x < 0:
        raise ValueError(f"ceil_cbrt of negative value {x}")
    if x == 0:
        return 0
    t = round(x ** (1.0 / 3.0))
    while t ** 3 >= x:
        t -= 1
    while t ** 3 < x:
        t += 1
    return t


def ceil_log2(x: int) -> int:
    """Smallest integer t with 2**t >= x, for x >= 1."""
    if x < 1:
        raise ValueError(f"ceil_log2 of {x}")
    return (x - 1).bit_length()


class Amplification(Enum):
    """Per-search repetition policy for driving down error probability."""

    NONE = "none"
    LOG_N = "logn"


@dataclass(frozen=True)
class OracleConfig:
    """Run-wide knobs for the emulated search primitives.

    ``failure_prob`` enables one-sided errors: with that probability a search
    omits one marked item.  It must stay at most 1/3.
    """

    seed: int = 0
    cost_constant: Fraction = Fraction(1)
    amplification_mode: Amplification = Amplification.NONE
    failure_prob: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "cost_constant", Fraction(self.cost_constant))
        object.__setattr__(self, "failure_prob", Fraction(self.failure_prob))
        if self.cost_constant <= 0:
            raise ValueError(f"cost_constant must be positive, got {self.cost_constant}")
        if not 0 <= self.failure_prob <= Fraction(1, 3):
            raise ValueError(
                f"failure_prob must lie in [0, 1/3], got {self.failure_prob}"
            )

    def amplification_for(self, n_context: int) -> int:
        """Multiplier applied to every charge in a run over n_context vertices."""
        if self.amplification_mode is Amplification.NONE:
            return 1
        return ceil_log2(n_context + 2)

    def scaled(self, base: int) -> Charge:
        cc = self.cost_constant
        if cc.denominator == 1:
            return base * cc.numerator
        return base * cc


class QueryLedger:
    """Accumulates quantum-style search charges and raw classical probes.

    ``breakdown`` holds pre-amplification charges per primitive;
    ``charged_queries`` is their sum times the run's amplification factor.
    A ledger belongs to exactly one run and is not thread-safe.
    """

    __slots__ = ("amplification", "raw_probes", "breakdown", "events", "_rng")

    def __init__(self, amplification: int = 1, record_events: bool = False):
        if amplification < 1:
            raise ValueError(f"amplification must be >= 1, got {amplification}")
        self.amplification = amplification
        self.raw_probes = 0
        self.breakdown: dict[str, Charge] = {
            GROVER_BATCH: 0,
            GROVER_EMPTY_CHECK: 0,
            COUNTING: 0,
        }
        self.events: Optional[list[tuple[str, int, int, Charge]]] = (
            [] if record_events else None
        )
        self._rng: Optional[random.Random] = None

    def rng_for(self, config: OracleConfig) -> random.Random:
        if self._rng is None:
            self._rng = random.Random(config.seed)
        return self._rng

    def charge(self, primitive: str, base_amount: Charge, domain: int = 0, marked: int = 0) -> None:
        if base_amount < 0:
            raise ValueError("charges must be nonnegative")
        self.breakdown[primitive] += base_amount
        if self.events is not None:
            self.events.append((primitive, domain, marked, base_amount))

    @property
    def charged_queries(self) -> Charge:
        return sum(self.breakdown.values()) * self.amplification

    def snapshot(self) -> dict:
        """JSON-ready view of the ledger state."""
        return {
            "charged_queries": str(Fraction(self.charged_queries)),
            "raw_probes": self.raw_probes,
            "breakdown": {k: str(Fraction(v)) for k, v in self.breakdown.items()},
            "amplification": self.amplification,
        }


def make_run_ledger(
    config: OracleConfig, n_context: int, *, record_events: bool = False
) -> QueryLedger:
    """Ledger for one algorithm run over a graph with n_context vertices."""
    return QueryLedger(
        amplification=config.amplification_for(n_context),
        record_events=record_events,
    )


def grover_find_all(
    domain_size: int,
    predicate: Callable[[int], bool],
    config: OracleConfig,
    ledger: QueryLedger,
) -> list[int]:
    """All marked indices of the domain, in seeded-random order.

    Charges ceil(sqrt(k * l)) to the batch bucket and ceil(sqrt(l)) to the
    emptiness-certificate bucket, both scaled by the cost constant.  With
    failure injection enabled, one marked item is omitted with probability
    ``config.failure_prob``.
    """
    if domain_size < 0:
        raise ValueError(f"domain size {domain_size} is negative")
    marked = [i for i in range(domain_size) if predicate(i)]
    k = len(marked)
    ledger.charge(
        GROVER_BATCH, config.scaled(ceil_sqrt(k * domain_size)), domain_size, k
    )
    ledger.charge(
        GROVER_EMPTY_CHECK, config.scaled(ceil_sqrt(domain_size)), domain_size, k
    )
    rng = ledger.rng_for(config)
    if k and config.failure_prob and rng.random() < config.failure_prob:
        marked.pop(rng.randrange(k))
    rng.shuffle(marked)
    return marked


def grover_find_one(
    domain_size: int,
    predicate: Callable[[int], bool],
    config: OracleConfig,
    ledger: QueryLedger,
) -> Optional[int]:
    """A seeded-uniform marked index, or None when nothing is marked.

    A successful search over a domain with k marked items costs
    ceil(sqrt(l / k)); an unsuccessful one costs the ceil(sqrt(l)) emptiness
    certificate.
    """
    if domain_size < 0:
        raise ValueError(f"domain size {domain_size} is negative")
    marked = [i for i in range(domain_size) if predicate(i)]
    k = len(marked)
    if k == 0:
        ledger.charge(
            GROVER_EMPTY_CHECK, config.scaled(ceil_sqrt(domain_size)), domain_size, 0
        )
        return None
    ledger.charge(
        GROVER_BATCH, config.scaled(ceil_sqrt_ratio(domain_size, k)), domain_size, k
    )
    rng = ledger.rng_for(config)
    if config.failure_prob and rng.random() < config.failure_prob:
        # The machine overlooks one marked item; with a single item that
        # manifests as a miss despite the search-time charge.
        marked.pop(rng.randrange(k))
        if not marked:
            return None
    return marked[rng.randrange(len(marked))]


def quantum_count(
    bits: Sequence[int],
    config: OracleConfig,
    ledger: QueryLedger,
) -> int:
    """Estimate of the popcount within additive floor(sqrt(n)), seeded.

    Charges ceil(sqrt(n)) to the counting bucket.  The estimate is clamped
    into [0, n].
    """
    n = len(bits)
    true_count = sum(1 for b in bits if b)
    ledger.charge(COUNTING, config.scaled(ceil_sqrt(n)), n, true_count)
    if n == 0:
        return 0
    radius = math.isqrt(n)
    rng = ledger.rng_for(config)
    delta = rng.randint(-radius, radius)
    return max(0, min(n, true_count + delta))
