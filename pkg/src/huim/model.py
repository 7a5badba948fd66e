"""Utility-annotated transaction model and exact scan-based utility arithmetic.

Every monetary value is held in scaled integer units: a decimal with
``precision`` fractional digits is stored as ``value * 10**precision``.  All
sums, thresholds and comparisons are therefore exact; ratio thresholds are
kept as :class:`fractions.Fraction` so that membership tests reduce to integer
cross-multiplication and no float ever participates in a decision.

The ``*_utility`` / ``item_twu`` / ``anterior_utility`` functions compute
their results straight from the definitions by scanning transactions.  The
mining engine never calls them; that independence is what lets the test suite
use them as oracles against the tree/list machinery.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

SUPPORT_ORDER = "support"
TWU_ORDER = "twu"

Amount = int  # scaled utility units


class InputError(ValueError):
    """Input data violates the model (bad counts, utilities, thresholds...)."""


def natural_key(name: str):
    """Sort key putting integer-looking item names in numeric order."""
    if name.isascii() and name.isdigit():
        return (0, int(name), name)
    return (1, 0, name)


def parse_amount(text: str, precision: int) -> Amount:
    """Parse a decimal string into scaled integer units, exactly.

    Values with more fractional digits than ``precision`` are rejected rather
    than rounded, so a parsed amount always round-trips bit-for-bit.
    """
    s = text.strip()
    negative = s.startswith("-")
    if negative or s.startswith("+"):
        s = s[1:]
    whole, _, frac = s.partition(".")
    digits = whole + frac
    if not digits or not digits.isascii() or not digits.isdigit():
        raise InputError(f"malformed decimal value {text!r}")
    if len(frac) > precision:
        raise InputError(
            f"value {text!r} has more than {precision} fractional digits"
        )
    units = int(whole or "0") * 10**precision + int(frac.ljust(precision, "0") or "0")
    return -units if negative else units


def format_amount(units: Amount, precision: int) -> str:
    """Render scaled units as a fixed-point decimal (no trailing-zero stripping)."""
    if precision == 0:
        return str(units)
    sign = "-" if units < 0 else ""
    whole, frac = divmod(abs(units), 10**precision)
    return f"{sign}{whole}.{frac:0{precision}d}"


class ItemTable:
    """Bijection between dense item ids 0..m-1 and external item names."""

    __slots__ = ("names", "_ids")

    def __init__(self, names: Iterable[str]):
        self.names = tuple(names)
        self._ids = {name: i for i, name in enumerate(self.names)}
        if len(self._ids) != len(self.names):
            raise InputError("duplicate item names")
        if any(not n for n in self.names):
            raise InputError("empty item name")

    @classmethod
    def from_names(cls, names: Iterable[str]) -> "ItemTable":
        """Build the table over the given names in natural name order."""
        return cls(sorted(set(names), key=natural_key))

    def id_of(self, name: str) -> int:
        return self._ids[name]

    def name_of(self, item: int) -> str:
        return self.names[item]

    def __len__(self) -> int:
        return len(self.names)

    def __contains__(self, name: str) -> bool:
        return name in self._ids


@dataclass(frozen=True, slots=True)
class RawTransaction:
    """One input transaction: (item id, count) pairs, no duplicate items."""

    tid: int
    entries: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.tid < 1:
            raise InputError(f"transaction id {self.tid} must be positive")
        seen = set()
        for item, count in self.entries:
            if count < 1:
                raise InputError(
                    f"transaction {self.tid}: count {count} for item {item} not positive"
                )
            if item in seen:
                raise InputError(f"transaction {self.tid}: duplicate item {item}")
            seen.add(item)


@dataclass(frozen=True, slots=True)
class TransactionDatabase:
    items: ItemTable
    transactions: tuple[RawTransaction, ...]


@dataclass(frozen=True, slots=True)
class UtilityTable:
    """Per-item external utility in scaled units, aligned with the item table."""

    values: tuple[Amount, ...]
    precision: int = 2

    def __post_init__(self):
        if any(v <= 0 for v in self.values):
            raise InputError("external utilities must be strictly positive")
        if self.precision < 0:
            raise InputError("precision must be non-negative")

    def of(self, item: int) -> Amount:
        return self.values[item]


@dataclass(frozen=True, slots=True)
class Threshold:
    """Minimum-utility threshold: absolute scaled units, or an exact ratio of
    the database's total utility."""

    kind: str
    value: Amount | Fraction

    @classmethod
    def absolute(cls, units: Amount) -> "Threshold":
        if units < 0:
            raise InputError("absolute threshold must be non-negative")
        return cls("absolute", units)

    @classmethod
    def ratio(cls, value: Fraction | int | str) -> "Threshold":
        ratio = Fraction(value)
        if not 0 <= ratio <= 1:
            raise InputError(f"ratio threshold {ratio} outside [0, 1]")
        return cls("ratio", ratio)


@dataclass(frozen=True, slots=True)
class SuccinctTransaction:
    """Filtered transaction: (item, utility-in-transaction) pairs in IsDO
    order (highest-ranked item first), with its recomputed utility."""

    tid: int
    entries: tuple[tuple[int, Amount], ...]
    tu: Amount

    def item_set(self) -> frozenset[int]:
        return frozenset(item for item, _ in self.entries)


@dataclass(frozen=True, slots=True)
class SuccinctDatabase:
    """TWU-filtered, utility-annotated, doubly sorted transaction store.

    ``isdo_rank`` maps each retained item to its rank (0 = highest); the
    paper-style relation "x > y" reads rank(x) < rank(y).  ``total_utility``
    is the sum of transaction utilities of the *original* database, which is
    what ratio thresholds are resolved against.  ``item_twu`` is the TWU
    recomputed on the filtered transactions, kept as a statistic and as the
    twu-desc ranking metric.
    """

    items: ItemTable
    transactions: tuple[SuccinctTransaction, ...]
    isdo_rank: dict[int, int]
    isdo_items: tuple[int, ...]
    support: dict[int, int]
    item_utility: dict[int, Amount]
    item_twu: dict[int, Amount]
    total_utility: Amount
    minutility: Amount | Fraction


# ---------------------------------------------------------------------------
# scan operations (definitional; used as oracles by the tests)


def tx_item_utility(tx: RawTransaction, item: int, ut: UtilityTable) -> Amount:
    """Utility of ``item`` in ``tx``: count times external utility."""
    for i, count in tx.entries:
        if i == item:
            return count * ut.of(item)
    raise KeyError(f"item {item} not in transaction {tx.tid}")


def tx_itemset_utility(tx: RawTransaction, itemset: Iterable[int], ut: UtilityTable) -> Amount:
    """Utility of ``itemset`` in ``tx``; 0 unless the transaction contains it."""
    counts = dict(tx.entries)
    members = set(itemset)
    if not members <= counts.keys():
        return 0
    return sum(counts[i] * ut.of(i) for i in members)


def tx_utility(tx: RawTransaction, ut: UtilityTable) -> Amount:
    """Transaction utility: sum of the utilities of all its items."""
    return sum(count * ut.of(item) for item, count in tx.entries)


def db_itemset_utility(db: TransactionDatabase, itemset: Iterable[int], ut: UtilityTable) -> Amount:
    """Utility of ``itemset`` summed over all transactions containing it."""
    members = tuple(itemset)
    return sum(tx_itemset_utility(t, members, ut) for t in db.transactions)


def total_db_utility(db: TransactionDatabase, ut: UtilityTable) -> Amount:
    return sum(tx_utility(t, ut) for t in db.transactions)


def item_twu(db: TransactionDatabase, ut: UtilityTable) -> dict[int, Amount]:
    """Transaction-weighted utility of every item in the universe (0 if absent)."""
    twu = dict.fromkeys(range(len(db.items)), 0)
    for t in db.transactions:
        tu = tx_utility(t, ut)
        for item, _ in t.entries:
            twu[item] += tu
    return twu


def resolve_threshold(
    th: Threshold, db: TransactionDatabase, ut: UtilityTable
) -> Amount | Fraction:
    """Turn a threshold into the exact comparison bound.

    Ratio thresholds become ``ratio * total_utility`` kept as a Fraction, so
    ``utility >= bound`` is decided by cross-multiplication.
    """
    if th.kind == "absolute":
        return th.value
    return th.value * total_db_utility(db, ut)


def compute_isdo(
    db: TransactionDatabase,
    ut: UtilityTable,
    strategy: str = SUPPORT_ORDER,
    items: Iterable[int] | None = None,
) -> dict[int, int]:
    """Rank items by descending support or TWU; ties break by ascending id.

    ``items`` restricts the ranked set (default: every item occurring in the
    database).  Returns {item: rank} with rank 0 for the highest-ranked item.
    """
    if strategy == SUPPORT_ORDER:
        metric: dict[int, int] = {}
        for t in db.transactions:
            for item, _ in t.entries:
                metric[item] = metric.get(item, 0) + 1
    elif strategy == TWU_ORDER:
        metric = item_twu(db, ut)
    else:
        raise InputError(f"unknown order strategy {strategy!r}")
    if items is None:
        ranked = [i for i in range(len(db.items)) if metric.get(i, 0) > 0]
    else:
        ranked = list(items)
    return _rank_items(metric, ranked)


def _rank_items(metric: Mapping[int, int], items: Iterable[int]) -> dict[int, int]:
    order = sorted(items, key=lambda i: (-metric.get(i, 0), i))
    return {item: rank for rank, item in enumerate(order)}


def build_succinct(
    db: TransactionDatabase,
    ut: UtilityTable,
    minutility: Amount | Fraction,
    strategy: str = SUPPORT_ORDER,
) -> SuccinctDatabase:
    """Filter, annotate and doubly sort the database.

    Items whose TWU on the original database falls below ``minutility`` are
    removed (strictly below: equality is retained); surviving entries carry
    their in-transaction utility; emptied transactions are dropped;
    transaction utilities are recomputed over the survivors.  Entries are
    sorted by IsDO rank and transactions lexicographically by their rank
    sequences (a strict prefix precedes its extensions), then renumbered 1..n.
    """
    if strategy not in (SUPPORT_ORDER, TWU_ORDER):
        raise InputError(f"unknown order strategy {strategy!r}")

    twu: dict[int, Amount] = {}
    total = 0
    for t in db.transactions:  # pass 1: original-database TU and TWU
        tu = 0
        for item, count in t.entries:
            tu += count * ut.of(item)
        total += tu
        for item, _ in t.entries:
            twu[item] = twu.get(item, 0) + tu

    retained = {i for i in range(len(db.items)) if twu.get(i, 0) >= minutility}

    kept: list[tuple[list[tuple[int, Amount]], Amount]] = []
    for t in db.transactions:  # pass 2: project onto retained items
        entries = [(i, c * ut.of(i)) for i, c in t.entries if i in retained]
        if not entries:
            continue
        kept.append((entries, sum(u for _, u in entries)))

    support = dict.fromkeys(retained, 0)
    item_utility = dict.fromkeys(retained, 0)
    post_twu = dict.fromkeys(retained, 0)
    for entries, tu in kept:
        for item, u in entries:
            support[item] += 1
            item_utility[item] += u
            post_twu[item] += tu

    metric = support if strategy == SUPPORT_ORDER else post_twu
    rank = _rank_items(metric, retained)
    isdo_items = tuple(sorted(retained, key=rank.__getitem__))

    for entries, _ in kept:
        entries.sort(key=lambda e: rank[e[0]])
    kept.sort(key=lambda pair: tuple(rank[i] for i, _ in pair[0]))

    transactions = tuple(
        SuccinctTransaction(tid, tuple(entries), tu)
        for tid, (entries, tu) in enumerate(kept, start=1)
    )
    return SuccinctDatabase(
        items=db.items,
        transactions=transactions,
        isdo_rank=rank,
        isdo_items=isdo_items,
        support=support,
        item_utility=item_utility,
        item_twu=post_twu,
        total_utility=total,
        minutility=minutility,
    )


def prii_set(
    itemset: Iterable[int], tx: SuccinctTransaction, isdo_rank: Mapping[int, int]
) -> tuple[int, ...]:
    """Items of ``tx`` ranked strictly above the itemset's first item.

    The "first item" is the highest-ranked member.  Raises if ``itemset`` is
    not contained in the transaction.
    """
    members = set(itemset)
    if not members:
        raise ValueError("prii of the empty itemset is undefined")
    present = tx.item_set()
    if not members <= present:
        raise ValueError(f"itemset {sorted(members)} not contained in transaction {tx.tid}")
    first = min(isdo_rank[i] for i in members)
    return tuple(i for i, _ in tx.entries if isdo_rank[i] < first)


def anterior_utility(itemset: Iterable[int], sdb: SuccinctDatabase) -> Amount:
    """Sum, over transactions containing ``itemset``, of the utilities of the
    items ranked above its first item.  Oracle for the node-list Nd_au sums."""
    members = frozenset(itemset)
    if not members:
        return 0
    first = min(sdb.isdo_rank[i] for i in members)
    total = 0
    for tx in sdb.transactions:
        if members <= tx.item_set():
            total += sum(u for i, u in tx.entries if sdb.isdo_rank[i] < first)
    return total
