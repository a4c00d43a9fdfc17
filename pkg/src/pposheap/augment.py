"""Query-time augmentation: preorder intervals and maximal reach pointers.

The maximal reach of position i is the deepest node whose spelled string
prefixes prev(T[i..]); it tells a query how far suffix i's encoding is
actually represented in the trie.  Reaches are computed left to right:
the reach of position 1 is its own node (the last inserted, necessarily a
leaf), and each later reach starts from the previous reach's forward
suffix link and descends by child lookups, reading window symbols in O(1)
from the distance arrays.  The total number of descent steps over a text
obeys ``depth(reach(n)) - depth(reach(1)) + 2*(n-1)``.

Preorder numbering (children visited in encoded-symbol order) gives every
node an interval [pre, post] such that ancestor tests and subtree
enumeration are O(1) and O(size).
"""

from array import array

from .encoding import build_dist_arrays, encsym_sort_key
from .heap import Heap, Node


def compute_preorder(heap: Heap) -> None:
    """Assign pre/post interval bounds (arrays on the heap, by sid) and
    record the preorder sequence."""
    pre = array("q", [0]) * len(heap.nodes)
    post = array("q", [0]) * len(heap.nodes)
    order = []
    stack = [heap.root]
    exits = []
    counter = 0
    while stack:
        v = stack.pop()
        if v is None:
            post[exits.pop().sid] = counter - 1
            continue
        pre[v.sid] = counter
        counter += 1
        order.append(v)
        stack.append(None)
        exits.append(v)
        ch = v.children
        if ch:
            for sym in sorted(ch, key=encsym_sort_key, reverse=True):
                stack.append(ch[sym])
    heap.pre = pre
    heap.post = post
    heap.preorder = order


def subtree_contains(heap: Heap, anc: Node, node: Node) -> bool:
    """True when ``node`` lies in the subtree rooted at ``anc`` (inclusive)."""
    pre = heap.pre
    return pre[anc.sid] <= pre[node.sid] <= heap.post[anc.sid]


def compute_mrp(heap: Heap) -> None:
    """Fill ``node.mrp`` for every position id, left to right."""
    n = heap.n
    if n == 0:
        heap.mrp_visits = 0
        return
    text = heap.text
    dists = heap.dists
    prev_d = dists.prev
    is_par = dists.is_param
    nodes = heap.nodes
    pi_total = 0

    v = nodes[n]                  # node id 1, the last inserted leaf
    v.mrp = v
    for i in range(2, n + 1):
        w = v.slink
        visits = 1
        while True:
            k = w.depth + 1
            p = i + k - 1
            if p > n:
                break
            if is_par[p]:
                dp = prev_d[p]
                sym = dp if (dp is not None and dp <= k - 1) else 0
            else:
                sym = text[p - 1]
            ch = w.children
            nxt = ch.get(sym) if ch else None
            if nxt is None:
                break
            w = nxt
            visits += 1
        nodes[n - i + 1].mrp = w  # node id i
        pi_total += visits
        v = w
    heap.mrp_visits = pi_total


def augment(heap: Heap) -> Heap:
    """Compute distance arrays, preorder intervals, and maximal reaches.

    Idempotent: a no-op when the heap is already augmented and unchanged
    since.  Returns the heap for chaining.
    """
    if heap.augmented:
        return heap
    heap.dists = build_dist_arrays(heap.text, heap.alphabet)
    compute_preorder(heap)
    compute_mrp(heap)
    heap.augmented = True
    return heap
