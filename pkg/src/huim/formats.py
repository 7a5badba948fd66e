"""File formats and canonical result rendering.

Native datasets are two UTF-8 text files:

* utility table — one ``item<TAB>decimal_utility`` per line;
* transactions — one transaction per line of space-separated ``item:count``
  tokens.

``#`` starts a comment line and blank lines are ignored in both.  Duplicate
items within a transaction line are merged by summing their counts.

The single-file format reads ``i1 i2 ... ik:TU:u1 u2 ... uk`` per line with
integer item ids and integer utilities; TU must equal the utility sum.  Each
listed value becomes the item's exact utility in that transaction (loaded as
count := value with a unit external utility, since one item may carry
different utilities in different transactions).

Result files hold one itemset per line -- names in ascending natural order,
then " #UTIL: " and the utility at the configured precision -- sorted by
(length, items).  Same input and flags always produce identical bytes.
"""

from __future__ import annotations

import os

from .miner import HighUtilityItemset
from .model import (
    InputError,
    ItemTable,
    RawTransaction,
    TransactionDatabase,
    UtilityTable,
    format_amount,
    parse_amount,
)


class ParseError(InputError):
    """A file failed to parse or validate; carries file and line context."""

    def __init__(self, path: str | os.PathLike, lineno: int, message: str):
        self.path = str(path)
        self.lineno = lineno
        super().__init__(f"{self.path}:{lineno}: {message}")


def _content_lines(path):
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            yield lineno, line


def load_native(
    transactions_path, utility_path, precision: int = 2
) -> tuple[TransactionDatabase, UtilityTable]:
    """Load a native dataset; the item universe is the union of both files."""
    utilities: dict[str, int] = {}
    for lineno, line in _content_lines(utility_path):
        parts = line.split("\t")
        if len(parts) != 2:
            raise ParseError(utility_path, lineno, "expected 'item<TAB>utility'")
        name, value_text = parts[0].strip(), parts[1].strip()
        if not name:
            raise ParseError(utility_path, lineno, "empty item name")
        if name in utilities:
            raise ParseError(utility_path, lineno, f"duplicate utility entry for {name!r}")
        try:
            value = parse_amount(value_text, precision)
        except InputError as exc:
            raise ParseError(utility_path, lineno, str(exc)) from exc
        if value <= 0:
            raise ParseError(utility_path, lineno, f"utility for {name!r} must be positive")
        utilities[name] = value

    raw_transactions: list[tuple[int, dict[str, int]]] = []
    for lineno, line in _content_lines(transactions_path):
        counts: dict[str, int] = {}
        for token in line.split():
            name, sep, count_text = token.rpartition(":")
            if not sep or not name:
                raise ParseError(transactions_path, lineno, f"malformed token {token!r}")
            try:
                count = int(count_text)
            except ValueError:
                raise ParseError(
                    transactions_path, lineno, f"malformed count in token {token!r}"
                ) from None
            if count <= 0:
                raise ParseError(
                    transactions_path, lineno, f"non-positive count in token {token!r}"
                )
            counts[name] = counts.get(name, 0) + count  # duplicates merge by summing
        if not counts:
            raise ParseError(transactions_path, lineno, "empty transaction")
        for name in counts:
            if name not in utilities:
                raise ParseError(
                    transactions_path, lineno, f"item {name!r} has no utility entry"
                )
        raw_transactions.append((lineno, counts))

    items = ItemTable.from_names(utilities)
    transactions = tuple(
        RawTransaction(
            tid,
            tuple(sorted((items.id_of(n), c) for n, c in counts.items())),
        )
        for tid, (_, counts) in enumerate(raw_transactions, start=1)
    )
    table = UtilityTable(tuple(utilities[name] for name in items.names), precision)
    return TransactionDatabase(items, transactions), table


def load_spmf(path, precision: int = 2) -> tuple[TransactionDatabase, UtilityTable]:
    """Load the single-file format; every item gets a unit external utility."""
    parsed: list[list[tuple[str, int]]] = []
    names: set[str] = set()
    for lineno, line in _content_lines(path):
        parts = line.split(":")
        if len(parts) != 3:
            raise ParseError(path, lineno, "expected 'items:TU:utilities'")
        item_names = parts[0].split()
        try:
            tu = int(parts[1])
            values = [int(v) for v in parts[2].split()]
        except ValueError:
            raise ParseError(path, lineno, "non-integer utility value") from None
        if len(item_names) != len(values):
            raise ParseError(
                path, lineno,
                f"{len(item_names)} items but {len(values)} utility values",
            )
        if not item_names:
            raise ParseError(path, lineno, "empty transaction")
        if any(v <= 0 for v in values):
            raise ParseError(path, lineno, "non-positive item utility")
        if sum(values) != tu:
            raise ParseError(
                path, lineno,
                f"transaction utility {tu} != sum of item utilities {sum(values)}",
            )
        merged: dict[str, int] = {}
        for name, value in zip(item_names, values):
            merged[name] = merged.get(name, 0) + value
        parsed.append(sorted(merged.items()))
        names.update(merged)

    items = ItemTable.from_names(names)
    unit = 10**precision
    transactions = tuple(
        RawTransaction(
            tid, tuple(sorted((items.id_of(n), v) for n, v in entries))
        )
        for tid, entries in enumerate(parsed, start=1)
    )
    table = UtilityTable((unit,) * len(items), precision)
    return TransactionDatabase(items, transactions), table


def write_native(
    db: TransactionDatabase, ut: UtilityTable, transactions_path, utility_path
) -> None:
    with open(utility_path, "w", encoding="utf-8") as fh:
        for item, name in enumerate(db.items.names):
            fh.write(f"{name}\t{format_amount(ut.of(item), ut.precision)}\n")
    with open(transactions_path, "w", encoding="utf-8") as fh:
        for t in db.transactions:
            tokens = " ".join(f"{db.items.name_of(i)}:{c}" for i, c in t.entries)
            fh.write(tokens + "\n")


def format_results(results: list[HighUtilityItemset], precision: int) -> str:
    """Canonical result text: already-sorted itemsets, one per line."""
    return "".join(
        f"{' '.join(r.items)} #UTIL: {format_amount(r.utility, precision)}\n"
        for r in results
    )
