"""Per-itemset node lists built over the prefix utility tree.

A list entry (nd_id, nd_u, nd_au, nd_aux) summarizes one tree node's share of
an itemset: nd_id is the node's n_code, nd_u the itemset's utility over the
transactions registered at that node, nd_au their anterior utility (items
ranked above the itemset's top item), and nd_aux the utility of the itemset
minus its top item, kept so longer lists can be joined without revisiting
transactions.  List length is bounded by tree-node count, not by support.
"""

from __future__ import annotations


class JoinCounter:
    """Accumulates merge-cost instrumentation across joins."""

    __slots__ = ("joins", "comparisons", "bound_violations")

    def __init__(self):
        self.joins = 0
        self.comparisons = 0
        self.bound_violations = 0

    def record(self, comparisons: int, len_a: int, len_b: int) -> None:
        self.joins += 1
        self.comparisons += comparisons
        if comparisons > len_a + len_b:
            self.bound_violations += 1


class PUNList:
    """Ordered list of (nd_id, nd_u, nd_au, nd_aux) quadruples, nd_id ascending."""

    __slots__ = ("quads",)

    def __init__(self, quads: list[tuple[int, int, int, int]] | None = None):
        self.quads = quads if quads is not None else []

    def __len__(self) -> int:
        return len(self.quads)

    def __iter__(self):
        return iter(self.quads)

    def __eq__(self, other) -> bool:
        return isinstance(other, PUNList) and self.quads == other.quads

    def __repr__(self) -> str:
        return f"PUNList({self.quads!r})"


def totals(pl: PUNList) -> tuple[int, int]:
    """(utility, anterior utility) of the itemset: the nd_u and nd_au sums."""
    u = 0
    au = 0
    for _, nd_u, nd_au, _ in pl.quads:
        u += nd_u
        au += nd_au
    return u, au


def render_punlist(pl: PUNList) -> str:
    """Render as "{(nd_id, nd_u, nd_au, nd_aux), ...}" for golden tests."""
    return "{" + ", ".join(f"({a}, {b}, {c}, {d})" for a, b, c, d in pl.quads) + "}"


def build_two_item_punlists(tree, item: int, use_mark_optimization: bool = True) -> dict:
    """Lists of every 2-itemset {x, item} with x ranked above ``item``.

    Walks the header chain of ``item``; for each node the parent path is
    climbed to the root, merging the node's tr_list against each ancestor's.
    With the mark optimization each ancestor keeps a cursor at the last triple
    consumed, so across the whole pass no ancestor triple is scanned twice:
    chain order guarantees every later node's tids lie beyond the cursor.

    Returns {extension item: PUNList}, keyed in IsDO rank order.  Extensions
    that never co-occur with ``item`` are absent.
    """
    nodes = tree.nodes
    for node in nodes:
        node.mark = -1
    lists: dict[int, PUNList] = {}

    idx = tree.first_node(item)
    while idx is not None:
        node = nodes[idx]
        tr = node.tr_list
        aux = 0
        for _, u, _ in tr:
            aux += u
        anc_idx = node.parent
        while anc_idx != 0:
            anc = nodes[anc_idx]
            atr = anc.tr_list
            j = anc.mark + 1 if use_mark_optimization else 0
            u_sum = 0
            au_sum = 0
            last = -1
            for tid, u, _ in tr:
                while j < len(atr) and atr[j][0] < tid:
                    j += 1
                # every transaction registered below passed through the ancestor
                assert j < len(atr) and atr[j][0] == tid, (
                    f"tid {tid} missing from ancestor node {anc.n_code}"
                )
                u_sum += u + atr[j][1]
                au_sum += atr[j][2]
                last = j
                j += 1
            if use_mark_optimization:
                anc.mark = last
            pl = lists.get(anc.label)
            if pl is None:
                pl = lists[anc.label] = PUNList()
            pl.quads.append((node.n_code, u_sum, au_sum, aux))
            anc_idx = anc.parent
        idx = node.next_same_label

    rank = tree.isdo_rank
    return {x: lists[x] for x in sorted(lists, key=rank.__getitem__)}


def join(pl_ya: PUNList, pl_za: PUNList, counter: JoinCounter | None = None) -> PUNList:
    """Merge two (k-1)-itemset lists into the list of z·y·A.

    Positional roles matter: the first argument is the list of the itemset
    lacking the new top item z, the second the list of z·A.  A linear two-way
    merge on nd_id; for each shared node the output entry is
    (nd_id, u_ya + u_za - aux_ya, au_za, u_ya).
    """
    a = pl_ya.quads
    b = pl_za.quads
    out = []
    i = j = 0
    comparisons = 0
    while i < len(a) and j < len(b):
        comparisons += 1
        ai = a[i][0]
        bj = b[j][0]
        if ai == bj:
            tp = a[i]
            tps = b[j]
            out.append((ai, tp[1] + tps[1] - tp[3], tps[2], tp[1]))
            i += 1
            j += 1
        elif ai < bj:
            i += 1
        else:
            j += 1
    if counter is not None:
        counter.record(comparisons, len(a), len(b))
    return PUNList(out)
