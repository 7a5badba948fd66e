"""Depth-first set-enumeration search driven by node-list joins.

The search prepends IsDO-higher items to a growing suffix: the children of an
itemset y·A are z·y·A for every z ranked above y that co-occurs with it.  An
itemset is emitted when its list's utility total meets the threshold, and its
subtree is explored only while utility + anterior utility stays at or above
the threshold (any extension's utility is bounded by that sum).  Every emitted
utility is read off the itemset's own list; the database is never rescanned.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from time import perf_counter

from .model import (
    SUPPORT_ORDER,
    Amount,
    InputError,
    ItemTable,
    Threshold,
    TransactionDatabase,
    UtilityTable,
    build_succinct,
    natural_key,
    resolve_threshold,
)
from .punlist import JoinCounter, PUNList, build_two_item_punlists, join, totals
from .tree import build_pu_tree


@dataclass
class MinerConfig:
    threshold: Threshold
    order_strategy: str = SUPPORT_ORDER
    prune_singletons: bool = False
    use_mark_optimization: bool = True


@dataclass(frozen=True, slots=True)
class HighUtilityItemset:
    """A result: item names in canonical (natural ascending) order + exact utility."""

    items: tuple[str, ...]
    utility: Amount


@dataclass(slots=True)
class ExploredItemset:
    """Trace record for one materialized k>=2 itemset.

    ``length`` is the size of the structure backing it (node-list quads here,
    utility-list entries in the baseline miner).
    """

    items: tuple[int, ...]
    length: int
    utility: Amount
    anterior: Amount
    emitted: bool
    expanded: bool


@dataclass
class SearchTrace:
    """Optional instrumentation collected during a run (tests, stats harness)."""

    keep_punlists: bool = False
    explored: list[ExploredItemset] = field(default_factory=list)
    punlists: list[tuple[tuple[int, ...], PUNList]] = field(default_factory=list)
    joins: JoinCounter = field(default_factory=JoinCounter)
    two_item_seconds: float = 0.0
    total_seconds: float = 0.0


def is_promising(u: Amount, au: Amount, minutility: Amount | Fraction) -> bool:
    """Extensions can still reach the threshold iff u + au does."""
    return u + au >= minutility


def mine(
    db: TransactionDatabase,
    ut: UtilityTable,
    config: MinerConfig,
    trace: SearchTrace | None = None,
) -> list[HighUtilityItemset]:
    """Mine all itemsets whose utility meets the threshold, with exact utilities.

    Pipeline: resolve the threshold, build the succinct database and the
    prefix utility tree, then for each header item build the 2-itemset lists
    and recurse over promising extensions.
    """
    t_start = perf_counter()
    minutility = resolve_threshold(config.threshold, db, ut)
    sdb = build_succinct(db, ut, minutility, config.order_strategy)

    found: list[tuple[tuple[int, ...], Amount]] = []
    for item in sdb.isdo_items:
        if sdb.support[item] > 0 and sdb.item_utility[item] >= minutility:
            found.append(((item,), sdb.item_utility[item]))

    tree = build_pu_tree(sdb)
    for item, head in tree.header:
        if config.prune_singletons:
            au_i = 0
            idx: int | None = head
            while idx is not None:
                node = tree.nodes[idx]
                au_i += sum(au for _, _, au in node.tr_list)
                idx = node.next_same_label
            if not is_promising(sdb.item_utility[item], au_i, minutility):
                continue

        t0 = perf_counter()
        extensions = build_two_item_punlists(tree, item, config.use_mark_optimization)
        children: list[tuple[int, PUNList, Amount, Amount]] = []
        # nearest-ranked extension first, per the left-to-right enumeration
        for x in reversed(extensions):
            pl = extensions[x]
            u, au = totals(pl)
            items2 = (x, item)
            if u >= minutility:
                found.append((items2, u))
            if trace is not None:
                _record(trace, items2, pl, u, au, minutility)
            children.append((x, pl, u, au))
        if trace is not None:
            trace.two_item_seconds += perf_counter() - t0

        for pos, (x, pl, u, au) in enumerate(children):
            if is_promising(u, au, minutility):
                _shui((x, item), pl, children[pos + 1 :], minutility, found, trace)

    if trace is not None:
        trace.total_seconds = perf_counter() - t_start
    return finalize_results(found, db.items)


def _shui(
    prefix: tuple[int, ...],
    prefix_pl: PUNList,
    siblings: list[tuple[int, PUNList, Amount, Amount]],
    minutility: Amount | Fraction,
    found: list[tuple[tuple[int, ...], Amount]],
    trace: SearchTrace | None,
) -> None:
    """Extend prefix y·A with each later sibling z·A, emit and recurse.

    Sibling lists are joined at this level and handed down positionally:
    z's children only ever see siblings created after z.  Unpromising
    children stay in the sibling sets (they are still join partners for
    their left neighbours); empty joins are dropped outright.
    """
    counter = trace.joins if trace is not None else None
    children: list[tuple[int, PUNList, Amount, Amount]] = []
    for z, pl_z, _, _ in siblings:
        pl = join(prefix_pl, pl_z, counter)
        if not pl.quads:
            continue
        u, au = totals(pl)
        items = (z,) + prefix
        if u >= minutility:
            found.append((items, u))
        if trace is not None:
            _record(trace, items, pl, u, au, minutility)
        children.append((z, pl, u, au))
    for pos, (z, pl, u, au) in enumerate(children):
        if is_promising(u, au, minutility):
            _shui((z,) + prefix, pl, children[pos + 1 :], minutility, found, trace)


def _record(trace, items, pl, u, au, minutility):
    trace.explored.append(
        ExploredItemset(items, len(pl.quads), u, au, u >= minutility, u + au >= minutility)
    )
    if trace.keep_punlists:
        trace.punlists.append((items, pl))


def finalize_results(
    found: list[tuple[tuple[int, ...], Amount]], items: ItemTable
) -> list[HighUtilityItemset]:
    """Map ids to names and sort canonically: by length, then item names."""
    out = [
        HighUtilityItemset(
            tuple(sorted((items.name_of(i) for i in ids), key=natural_key)), u
        )
        for ids, u in found
    ]
    out.sort(key=lambda h: (len(h.items), tuple(natural_key(n) for n in h.items)))
    return out
