import random

import pytest

from huim import ItemTable, RawTransaction, TransactionDatabase, UtilityTable

# Worked sample: five retail transactions over items a..g, integer utilities.
SAMPLE_UTILITIES = {"a": 30, "b": 50, "c": 40, "d": 30, "e": 10, "f": 10, "g": 20}
SAMPLE_TRANSACTIONS = [
    [("a", 1), ("c", 1), ("d", 1), ("f", 3)],
    [("a", 2), ("b", 2), ("c", 6), ("f", 5)],
    [("b", 2), ("f", 5), ("g", 5)],
    [("b", 4), ("c", 3), ("e", 2)],
    [("a", 2), ("c", 2), ("d", 6), ("e", 1), ("f", 1)],
]
SAMPLE_TOTAL_UTILITY = 1510


def make_sample() -> tuple[TransactionDatabase, UtilityTable]:
    items = ItemTable(sorted(SAMPLE_UTILITIES))
    transactions = tuple(
        RawTransaction(tid, tuple((items.id_of(n), c) for n, c in entries))
        for tid, entries in enumerate(SAMPLE_TRANSACTIONS, start=1)
    )
    ut = UtilityTable(tuple(SAMPLE_UTILITIES[n] for n in items.names), precision=0)
    return TransactionDatabase(items, transactions), ut


@pytest.fixture
def sample():
    return make_sample()


def ids(db: TransactionDatabase, names: str | list[str]) -> tuple[int, ...]:
    return tuple(db.items.id_of(n) for n in names)


def make_random_db(rng: random.Random, max_items: int = 10, max_transactions: int = 25):
    """Small random database: counts 1..10, integer external utilities 1..50."""
    n_items = rng.randint(2, max_items)
    items = ItemTable([str(i) for i in range(1, n_items + 1)])
    ut = UtilityTable(tuple(rng.randint(1, 50) for _ in range(n_items)), precision=0)
    transactions = []
    for tid in range(1, rng.randint(1, max_transactions) + 1):
        size = rng.randint(1, n_items)
        members = rng.sample(range(n_items), size)
        entries = tuple(sorted((i, rng.randint(1, 10)) for i in members))
        transactions.append(RawTransaction(tid, entries))
    return TransactionDatabase(items, tuple(transactions)), ut


def write_sample_files(tmp_path):
    """Native-format files of the worked sample (integer utilities)."""
    ut_path = tmp_path / "sample_utilities.txt"
    tx_path = tmp_path / "sample_transactions.txt"
    ut_path.write_text(
        "".join(f"{n}\t{v}\n" for n, v in sorted(SAMPLE_UTILITIES.items())),
        encoding="utf-8",
    )
    tx_path.write_text(
        "".join(
            " ".join(f"{n}:{c}" for n, c in entries) + "\n"
            for entries in SAMPLE_TRANSACTIONS
        ),
        encoding="utf-8",
    )
    return tx_path, ut_path
