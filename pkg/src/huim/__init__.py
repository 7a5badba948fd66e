"""High-utility itemset mining on a prefix utility tree with per-node lists.

The engine compresses per-itemset utility information onto shared tree nodes
instead of per-transaction entries, joins the lists of short itemsets into
those of longer ones, and prunes the set-enumeration search with the
utility + anterior-utility bound carried in every list.  A brute-force oracle
and a utility-list miner ship alongside so every result and every structural
claim can be cross-checked at desk scale.
"""

from .baselines import (
    STATS_CSV_HEADER,
    EnumerationBoundError,
    StructureStats,
    brute_force_mine,
    collect_stats,
    stats_csv_row,
    utility_list_mine,
)
from .datagen import GenSpec, gen_counts, gen_dataset, gen_transactions, gen_utility_table, replicate
from .formats import ParseError, format_results, load_native, load_spmf, write_native
from .miner import HighUtilityItemset, MinerConfig, SearchTrace, is_promising, mine
from .model import (
    InputError,
    ItemTable,
    RawTransaction,
    SuccinctDatabase,
    SuccinctTransaction,
    Threshold,
    TransactionDatabase,
    UtilityTable,
    anterior_utility,
    build_succinct,
    compute_isdo,
    db_itemset_utility,
    format_amount,
    item_twu,
    parse_amount,
    prii_set,
    resolve_threshold,
    total_db_utility,
    tx_item_utility,
    tx_itemset_utility,
    tx_utility,
)
from .punlist import JoinCounter, PUNList, build_two_item_punlists, join, render_punlist, totals
from .tree import PUNode, PUTree, build_pu_tree, insert_transaction, render_tree, verify_tree

__all__ = [
    "STATS_CSV_HEADER",
    "EnumerationBoundError",
    "GenSpec",
    "HighUtilityItemset",
    "InputError",
    "ItemTable",
    "JoinCounter",
    "MinerConfig",
    "PUNList",
    "PUNode",
    "PUTree",
    "ParseError",
    "RawTransaction",
    "SearchTrace",
    "StructureStats",
    "SuccinctDatabase",
    "SuccinctTransaction",
    "Threshold",
    "TransactionDatabase",
    "UtilityTable",
    "anterior_utility",
    "brute_force_mine",
    "build_pu_tree",
    "build_succinct",
    "build_two_item_punlists",
    "collect_stats",
    "compute_isdo",
    "db_itemset_utility",
    "format_amount",
    "format_results",
    "gen_counts",
    "gen_dataset",
    "gen_transactions",
    "gen_utility_table",
    "insert_transaction",
    "is_promising",
    "item_twu",
    "join",
    "load_native",
    "load_spmf",
    "mine",
    "parse_amount",
    "prii_set",
    "render_punlist",
    "render_tree",
    "replicate",
    "resolve_threshold",
    "stats_csv_row",
    "total_db_utility",
    "totals",
    "tx_item_utility",
    "tx_itemset_utility",
    "tx_utility",
    "utility_list_mine",
    "verify_tree",
    "write_native",
]
