"""Seeded synthetic dataset generation.

External utilities are drawn log-normally and clamped into a fixed band;
counts are uniform integers per (transaction, item) incidence; transaction
contents come from a Zipf-like item popularity.  Draws use named PCG64
streams spawned per item / per transaction, so enlarging a dataset never
perturbs the draws of what was already there.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .model import ItemTable, RawTransaction, TransactionDatabase, UtilityTable

GENERATOR = "pcg64-streams-v1"

_UTILITY_STREAM = 0
_STRUCTURE_STREAM = 1
_COUNT_STREAM = 2


@dataclass(frozen=True, slots=True)
class GenSpec:
    seed: int
    n_items: int
    n_transactions: int
    avg_tx_len: float
    popularity_skew: float = 1.0
    utility_location: float = 0.0
    utility_scale: float = 1.0
    utility_clamp: tuple[float, float] = (0.01, 10.0)
    count_range: tuple[int, int] = (1, 10)
    precision: int = 2

    def __post_init__(self):
        if self.n_items < 1 or self.n_transactions < 0:
            raise ValueError("need at least one item and a non-negative transaction count")
        if not 1.0 <= self.avg_tx_len <= self.n_items:
            raise ValueError("avg_tx_len must lie in [1, n_items]")
        lo, hi = self.utility_clamp
        if not 0 < lo <= hi:
            raise ValueError("utility clamp range is empty or non-positive")
        clo, chi = self.count_range
        if not 1 <= clo <= chi:
            raise ValueError("count range is empty or non-positive")


def _stream(spec: GenSpec, domain: int, index: int) -> np.random.Generator:
    return np.random.Generator(
        np.random.PCG64(np.random.SeedSequence(spec.seed, spawn_key=(domain, index)))
    )


def make_items(spec: GenSpec) -> ItemTable:
    """Item universe named "1".."n_items"."""
    return ItemTable([str(i) for i in range(1, spec.n_items + 1)])


def gen_utility_table(spec: GenSpec) -> UtilityTable:
    """Per-item external utility: log-normal draw, clamped, rounded to the
    configured precision, floored at one scaled unit so it stays positive."""
    lo, hi = spec.utility_clamp
    scale = 10**spec.precision
    values = []
    for item in range(spec.n_items):
        rng = _stream(spec, _UTILITY_STREAM, item)
        v = float(rng.lognormal(mean=spec.utility_location, sigma=spec.utility_scale))
        v = min(max(v, lo), hi)
        values.append(max(1, round(v * scale)))
    return UtilityTable(tuple(values), spec.precision)


def gen_transactions(spec: GenSpec) -> list[tuple[int, ...]]:
    """Transaction item sets: Poisson-ish lengths around avg_tx_len, items
    drawn without replacement under a (rank+1)**-skew popularity."""
    weights = np.arange(1, spec.n_items + 1, dtype=float) ** -spec.popularity_skew
    weights /= weights.sum()
    out = []
    for t in range(spec.n_transactions):
        rng = _stream(spec, _STRUCTURE_STREAM, t)
        length = 1 + int(rng.poisson(spec.avg_tx_len - 1.0))
        length = min(max(length, 1), spec.n_items)
        items = rng.choice(spec.n_items, size=length, replace=False, p=weights)
        out.append(tuple(sorted(int(i) for i in items)))
    return out


def gen_counts(spec: GenSpec, item_sets: list[tuple[int, ...]]) -> tuple[RawTransaction, ...]:
    """Assign an independent uniform count in count_range to every incidence."""
    lo, hi = spec.count_range
    transactions = []
    for t, items in enumerate(item_sets):
        rng = _stream(spec, _COUNT_STREAM, t)
        counts = rng.integers(lo, hi + 1, size=len(items))
        entries = tuple((item, int(c)) for item, c in zip(items, counts))
        transactions.append(RawTransaction(t + 1, entries))
    return tuple(transactions)


def gen_dataset(spec: GenSpec) -> tuple[TransactionDatabase, UtilityTable]:
    items = make_items(spec)
    ut = gen_utility_table(spec)
    db = TransactionDatabase(items, gen_counts(spec, gen_transactions(spec)))
    return db, ut


def replicate(db: TransactionDatabase, k: int) -> TransactionDatabase:
    """Concatenate the database with itself k times, renumbering tids.

    Every item's support and TWU scale by exactly k, which the scalability
    checks rely on.
    """
    if k < 1:
        raise ValueError("replication factor must be >= 1")
    transactions = []
    tid = 1
    for _ in range(k):
        for t in db.transactions:
            transactions.append(RawTransaction(tid, t.entries))
            tid += 1
    return TransactionDatabase(db.items, tuple(transactions))
