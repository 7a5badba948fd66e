"""Prefix utility tree: a trie over the succinct database.

Each node represents one item on one shared transaction prefix and carries a
``tr_list`` of (tid, utility, anterior utility) triples, one per transaction
routed through it.  Nodes get pre-order ``n_code`` identifiers, and same-label
nodes are threaded into header chains.  Because the succinct database sorts
transactions lexicographically by rank sequence, chains run in ascending
n_code order and their tid ranges are disjoint and increasing; the 2-itemset
list construction exploits both.
"""

from __future__ import annotations

from .model import SuccinctDatabase, SuccinctTransaction


class PUNode:
    __slots__ = (
        "label",
        "n_code",
        "tr_list",
        "parent",
        "next_same_label",
        "children",
        "mark",
    )

    def __init__(self, label: int | None, parent: int):
        self.label = label
        self.n_code = -1  # assigned by the pre-order pass after all inserts
        self.tr_list: list[tuple[int, int, int]] = []
        self.parent = parent
        self.next_same_label: int | None = None
        self.children: dict[int, int] = {}  # label -> arena index, creation order
        self.mark = -1  # scan cursor owned by the 2-itemset pass


class PUTree:
    """Arena-allocated tree; nodes are addressed by index, root at index 0."""

    __slots__ = ("nodes", "header", "isdo_rank", "items", "_first", "_last")

    def __init__(self, sdb: SuccinctDatabase):
        self.nodes: list[PUNode] = [PUNode(None, -1)]
        self.header: list[tuple[int, int]] = []  # (item, first node) in IsDO order
        self.isdo_rank = sdb.isdo_rank
        self.items = sdb.items
        self._first: dict[int, int] = {}
        self._last: dict[int, int] = {}

    def first_node(self, item: int) -> int | None:
        return self._first.get(item)


def insert_transaction(tree: PUTree, tx: SuccinctTransaction) -> None:
    """Walk ``tx`` down from the root, appending one triple per item.

    The anterior value recorded at each node is the sum of the utilities of
    the items already consumed from the transaction.
    """
    nodes = tree.nodes
    cur = 0
    anterior = 0
    for item, utility in tx.entries:
        nxt = nodes[cur].children.get(item)
        if nxt is None:
            nxt = len(nodes)
            nodes.append(PUNode(item, cur))
            nodes[cur].children[item] = nxt
            if item in tree._last:
                nodes[tree._last[item]].next_same_label = nxt
            else:
                tree._first[item] = nxt
            tree._last[item] = nxt
        nodes[nxt].tr_list.append((tx.tid, utility, anterior))
        anterior += utility
        cur = nxt


def build_pu_tree(sdb: SuccinctDatabase) -> PUTree:
    """Insert every transaction in order, then assign pre-order n_codes
    (children visited in creation order, root = 0) and build the header."""
    tree = PUTree(sdb)
    for tx in sdb.transactions:
        insert_transaction(tree, tx)

    nodes = tree.nodes
    code = 0
    stack = [0]
    while stack:
        idx = stack.pop()
        nodes[idx].n_code = code
        code += 1
        stack.extend(reversed(nodes[idx].children.values()))

    tree.header = [
        (item, tree._first[item]) for item in sdb.isdo_items if item in tree._first
    ]
    return tree


def verify_tree(tree: PUTree) -> list[str]:
    """Check the structural guarantees; returns the violations (empty if sound).

    Checked: triples tid-ascending per node, parent n_code below child n_code,
    header chains n_code-ascending, and later chain nodes carrying strictly
    larger tids than any earlier chain node.
    """
    violations = []
    nodes = tree.nodes
    if nodes[0].n_code != 0:
        violations.append("root n_code is not 0")
    for node in nodes[1:]:
        tids = [t for t, _, _ in node.tr_list]
        if any(a >= b for a, b in zip(tids, tids[1:])):
            violations.append(f"node {node.n_code}: tids not strictly ascending")
        if not node.tr_list:
            violations.append(f"node {node.n_code}: empty tr_list")
        if nodes[node.parent].n_code >= node.n_code:
            violations.append(f"node {node.n_code}: parent n_code not smaller")
    for item, head in tree.header:
        idx: int | None = head
        prev = None
        while idx is not None:
            node = nodes[idx]
            if node.label != item:
                violations.append(f"chain for item {item} reaches label {node.label}")
                break
            if prev is not None:
                if prev.n_code >= node.n_code:
                    violations.append(
                        f"chain for item {item}: n_codes not ascending at {node.n_code}"
                    )
                if prev.tr_list and node.tr_list and prev.tr_list[-1][0] >= node.tr_list[0][0]:
                    violations.append(
                        f"chain for item {item}: tid ranges overlap at node {node.n_code}"
                    )
            prev = node
            idx = node.next_same_label
    return violations


def render_tree(tree: PUTree) -> str:
    """Deterministic pre-order dump, one node per line, for golden tests."""
    nodes = tree.nodes
    lines = []
    stack = [0]
    while stack:
        idx = stack.pop()
        node = nodes[idx]
        if node.label is None:
            lines.append("0 <root> parent=- {}")
        else:
            triples = ", ".join(f"(T{t}: {u}, {au})" for t, u, au in node.tr_list)
            name = tree.items.name_of(node.label)
            parent_code = nodes[node.parent].n_code
            lines.append(f"{node.n_code} {name} parent={parent_code} {{{triples}}}")
        stack.extend(reversed(node.children.values()))
    return "\n".join(lines) + "\n"
