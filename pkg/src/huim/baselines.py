"""Reference miners and structure statistics.

``brute_force_mine`` is the referee: a plain subset enumeration whose only
pruning is support-0 branch cutting and whose utilities come from direct
per-transaction sums.  It shares no machinery (no TWU filter, no tree, no
lists) with the engine, which is what makes three-way agreement meaningful.

``utility_list_mine`` is a vertical-list miner in the style the node-list
structure is usually compared against: one entry per containing transaction,
joined by tid.  It deliberately adopts the same anterior-utility convention
(items ranked above the itemset's first item) so both miners prune on exactly
the same bound and the structure sizes are directly comparable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from time import perf_counter

from .miner import (
    ExploredItemset,
    HighUtilityItemset,
    SearchTrace,
    finalize_results,
    is_promising,
)
from .model import (
    SUPPORT_ORDER,
    Amount,
    Threshold,
    TransactionDatabase,
    UtilityTable,
    build_succinct,
    resolve_threshold,
)

ULEntry = tuple[int, int, int]  # (tid, itemset utility in tx, anterior utility in tx)


class EnumerationBoundError(RuntimeError):
    """The database has too many occurring items to enumerate exhaustively."""


def brute_force_mine(
    db: TransactionDatabase,
    ut: UtilityTable,
    threshold: Threshold,
    max_items: int = 20,
) -> list[HighUtilityItemset]:
    """Exhaustively enumerate item subsets and keep those meeting the threshold.

    Depth-first over items in support-descending order; a branch is cut only
    when its itemset occurs in no transaction (a superset cannot occur
    either).  Utilities are per-transaction sums carried down the recursion.
    """
    minutility = resolve_threshold(threshold, db, ut)

    txu: list[dict[int, Amount]] = []
    tids_by_item: dict[int, set[int]] = {}
    for pos, t in enumerate(db.transactions):
        utilities = {i: c * ut.of(i) for i, c in t.entries}
        txu.append(utilities)
        for item in utilities:
            tids_by_item.setdefault(item, set()).add(pos)

    occurring = sorted(tids_by_item, key=lambda i: (-len(tids_by_item[i]), i))
    if len(occurring) > max_items:
        raise EnumerationBoundError(
            f"{len(occurring)} occurring items exceed the enumeration bound {max_items}"
        )

    found: list[tuple[tuple[int, ...], Amount]] = []

    def walk(prefix: tuple[int, ...], prefix_u: dict[int, Amount] | None, start: int):
        for pos in range(start, len(occurring)):
            item = occurring[pos]
            if prefix_u is None:
                shared = tids_by_item[item]
                child_u = {t: txu[t][item] for t in shared}
            else:
                shared = prefix_u.keys() & tids_by_item[item]
                if not shared:
                    continue
                child_u = {t: prefix_u[t] + txu[t][item] for t in shared}
            itemset = prefix + (item,)
            total = sum(child_u.values())
            if total >= minutility:
                found.append((itemset, total))
            walk(itemset, child_u, pos + 1)

    walk((), None, 0)
    return finalize_results(found, db.items)


# ---------------------------------------------------------------------------
# utility-list miner


def utility_list_mine(
    db: TransactionDatabase,
    ut: UtilityTable,
    threshold: Threshold,
    trace: SearchTrace | None = None,
    order_strategy: str = SUPPORT_ORDER,
) -> list[HighUtilityItemset]:
    """Mine with per-transaction vertical lists; same search shape and pruning
    bound as the engine, so a list's length is exactly the itemset's support."""
    t_start = perf_counter()
    minutility = resolve_threshold(threshold, db, ut)
    sdb = build_succinct(db, ut, minutility, order_strategy)

    item_lists: dict[int, list[ULEntry]] = {i: [] for i in sdb.isdo_items}
    for tx in sdb.transactions:
        running = 0
        for item, u in tx.entries:
            item_lists[item].append((tx.tid, u, running))
            running += u

    found: list[tuple[tuple[int, ...], Amount]] = []
    for item in sdb.isdo_items:
        if sdb.support[item] > 0 and sdb.item_utility[item] >= minutility:
            found.append(((item,), sdb.item_utility[item]))

    for pos, item in enumerate(sdb.isdo_items):
        base = item_lists[item]
        if not base:
            continue
        t0 = perf_counter()
        children: list[tuple[int, list[ULEntry], Amount, Amount]] = []
        for x in reversed(sdb.isdo_items[:pos]):  # nearest-ranked first
            merged = _merge_pair(base, item_lists[x])
            if not merged:
                continue
            u = sum(e[1] for e in merged)
            au = sum(e[2] for e in merged)
            items2 = (x, item)
            if u >= minutility:
                found.append((items2, u))
            if trace is not None:
                trace.explored.append(
                    ExploredItemset(
                        items2, len(merged), u, au,
                        u >= minutility, u + au >= minutility,
                    )
                )
            children.append((x, merged, u, au))
        if trace is not None:
            trace.two_item_seconds += perf_counter() - t0
        for cpos, (x, merged, u, au) in enumerate(children):
            if is_promising(u, au, minutility):
                _ul_extend(
                    (x, item), merged, children[cpos + 1 :], base,
                    minutility, found, trace,
                )

    if trace is not None:
        trace.total_seconds = perf_counter() - t_start
    return finalize_results(found, db.items)


def _merge_pair(base: list[ULEntry], ext: list[ULEntry]) -> list[ULEntry]:
    """2-itemset list: tid-merge of two singleton lists; the anterior value
    comes from the extension (the new top item)."""
    out = []
    i = j = 0
    while i < len(base) and j < len(ext):
        bt = base[i][0]
        et = ext[j][0]
        if bt == et:
            out.append((bt, base[i][1] + ext[j][1], ext[j][2]))
            i += 1
            j += 1
        elif bt < et:
            i += 1
        else:
            j += 1
    return out


def _merge_join(
    parent: list[ULEntry], prefix: list[ULEntry], sib: list[ULEntry]
) -> list[ULEntry]:
    """k-itemset list from two (k-1)-itemset lists sharing parent A: for each
    shared tid, utility = u(prefix) + u(sib) - u(parent) in that transaction."""
    out = []
    i = j = k = 0
    while i < len(prefix) and j < len(sib):
        pt = prefix[i][0]
        st = sib[j][0]
        if pt == st:
            while parent[k][0] < pt:  # parent's transactions cover the prefix's
                k += 1
            out.append((pt, prefix[i][1] + sib[j][1] - parent[k][1], sib[j][2]))
            i += 1
            j += 1
        elif pt < st:
            i += 1
        else:
            j += 1
    return out


def _ul_extend(prefix_items, prefix_list, siblings, parent_list, minutility, found, trace):
    children = []
    for z, sib_list, _, _ in siblings:
        merged = _merge_join(parent_list, prefix_list, sib_list)
        if not merged:
            continue
        u = sum(e[1] for e in merged)
        au = sum(e[2] for e in merged)
        items = (z,) + prefix_items
        if u >= minutility:
            found.append((items, u))
        if trace is not None:
            trace.explored.append(
                ExploredItemset(
                    items, len(merged), u, au, u >= minutility, u + au >= minutility
                )
            )
        children.append((z, merged, u, au))
    for cpos, (z, merged, u, au) in enumerate(children):
        if is_promising(u, au, minutility):
            _ul_extend(
                (z,) + prefix_items, merged, children[cpos + 1 :], prefix_list,
                minutility, found, trace,
            )


# ---------------------------------------------------------------------------
# structure statistics

STATS_CSV_HEADER = (
    "dataset,threshold,order,explored,emitted,avg_punlist,avg_utillist,"
    "reduction_ratio,t2_ms,total_ms,peak_rss_kb"
)


@dataclass
class StructureStats:
    """Structure-size comparison over one paired run of both miners.

    The primary averages range over the emitted high-utility k>=2 itemsets;
    the ``*_explored`` variants range over every materialized k>=2 itemset,
    since it is ambiguous which population published averages use.  Ratios
    are None when the population is empty.
    """

    explored: int
    emitted: int
    avg_punlist_len: Fraction | None
    avg_utilitylist_len: Fraction | None
    reduction_ratio: Fraction | None
    avg_punlist_len_explored: Fraction | None
    avg_utilitylist_len_explored: Fraction | None
    reduction_ratio_explored: Fraction | None
    explored_by_length: dict[int, int] = field(default_factory=dict)
    join_comparisons: int = 0
    two_item_ms: float = 0.0
    total_ms: float = 0.0
    peak_rss_kb: int = 0


def collect_stats(mine_trace: SearchTrace, ul_trace: SearchTrace) -> StructureStats:
    """Combine the two miners' traces over their shared itemset population."""
    pun_len = {frozenset(e.items): e.length for e in mine_trace.explored}
    ul_len = {frozenset(e.items): e.length for e in ul_trace.explored}
    if pun_len.keys() != ul_len.keys():
        raise RuntimeError("miners explored different itemsets; stats not comparable")
    emitted = {frozenset(e.items) for e in mine_trace.explored if e.emitted}
    ul_emitted = {frozenset(e.items) for e in ul_trace.explored if e.emitted}
    if emitted != ul_emitted:
        raise RuntimeError("miners emitted different itemsets; stats not comparable")

    def average(lengths: dict, population) -> Fraction | None:
        population = list(population)
        if not population:
            return None
        return Fraction(sum(lengths[k] for k in population), len(population))

    def ratio(a: Fraction | None, b: Fraction | None) -> Fraction | None:
        if a is None or b is None or b == 0:
            return None
        return a / b

    avg_pun = average(pun_len, emitted)
    avg_ul = average(ul_len, emitted)
    avg_pun_x = average(pun_len, pun_len.keys())
    avg_ul_x = average(ul_len, ul_len.keys())

    by_length: dict[int, int] = {}
    for e in mine_trace.explored:
        by_length[len(e.items)] = by_length.get(len(e.items), 0) + 1

    return StructureStats(
        explored=len(pun_len),
        emitted=len(emitted),
        avg_punlist_len=avg_pun,
        avg_utilitylist_len=avg_ul,
        reduction_ratio=ratio(avg_ul, avg_pun),
        avg_punlist_len_explored=avg_pun_x,
        avg_utilitylist_len_explored=avg_ul_x,
        reduction_ratio_explored=ratio(avg_ul_x, avg_pun_x),
        explored_by_length=dict(sorted(by_length.items())),
        join_comparisons=mine_trace.joins.comparisons,
        two_item_ms=mine_trace.two_item_seconds * 1000.0,
        total_ms=mine_trace.total_seconds * 1000.0,
        peak_rss_kb=peak_rss_kb(),
    )


def peak_rss_kb() -> int:
    """Best-effort peak resident set size in kB; 0 when unavailable."""
    try:
        import resource

        return int(resource.getrusage(resource.RUSAGE_SELF).ru_maxrss)
    except Exception:
        return 0


def stats_csv_row(dataset: str, threshold_label: str, order: str, stats: StructureStats) -> str:
    """One flat CSV row matching STATS_CSV_HEADER."""

    def frac(v: Fraction | None) -> str:
        return "" if v is None else f"{float(v):.4f}"

    return ",".join(
        [
            dataset,
            threshold_label,
            order,
            str(stats.explored),
            str(stats.emitted),
            frac(stats.avg_punlist_len),
            frac(stats.avg_utilitylist_len),
            frac(stats.reduction_ratio),
            f"{stats.two_item_ms:.3f}",
            f"{stats.total_ms:.3f}",
            str(stats.peak_rss_kb),
        ]
    )
