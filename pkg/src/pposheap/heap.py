"""Right-to-left online parameterized position heap.

The index is a trie over prev-encoded suffixes of a text T of length n.
It is grown by prepending characters: after processing T[i..n] it holds
one node per processed position plus the root.  Each node's root path
spells the shortest prefix of prev(T[i..]) that was absent when position
i was inserted, so node ids and text positions are in bijection (the node
inserted for position i carries id i, and ids strictly decrease along any
downward path).

Insertion never re-encodes a suffix from scratch.  Every node keeps
*reversed suffix links*: rslink(a, v) = u when prepending one character
with encoded effect ``a`` turns v's spelled string into u's.  Concretely,
for a static character or a fresh parameter (a in statics or a = 0),
u spells a followed by v; for a parameter whose first repeat lies d
positions ahead (a = d >= 1), v's symbol at offset d must be 0 and u
spells v with a 0 prepended and that offset rewritten to d.  The new
front's insertion point is found by climbing from the previously inserted
leaf toward the root, testing each ancestor for the appropriate link:

  * static front character c: test Static(c) everywhere;
  * parameter with no registered repeat: test Dist(0) everywhere;
  * parameter whose first repeat is d away: test Dist(d) while the
    ancestor's depth is >= d, and Dist(0) strictly below depth d.

The first ancestor with a matching link yields the parent-to-be (the link
target); if the climb exhausts the root, a conceptual node below the root
matches every label and yields the root.  That conceptual node is never
materialized: ``parent(root) is None`` stands for it, and its collapsed
universal link to the root is counted once by ``rslink_count``.

Each insertion also records exactly one new reversed suffix link, from
the climb path's node one step below the stopping point, to the new node;
the inverse pointer is stored as the new node's forward suffix link.

Amortized, construction does O(1) link tests per character: the climb
counter over a whole build never exceeds
``depth(first inserted node) - depth(last inserted node) + 4*(n-1)``.
"""

from dataclasses import dataclass, field

from .encoding import Alphabet, OccRegistry


class Node:
    """One trie node.  ``sid`` is the stable internal number (the suffix
    length at insertion time; 0 for the root); position ids are derived
    from it once the final text length is known.  Preorder interval
    bounds live in arrays on the heap, keyed by sid, to keep nodes small
    (megabyte-scale builds are cache-bound)."""

    __slots__ = ("sid", "parent", "depth", "in_label", "children", "rs_out",
                 "slink", "mrp")

    def __init__(self, sid, parent, depth, in_label):
        self.sid = sid
        self.parent = parent
        self.depth = depth
        self.in_label = in_label      # edge label from parent; None at root
        self.children = None          # dict: encoded symbol -> Node
        self.rs_out = None            # dict: encoded symbol -> Node (link targets)
        self.slink = None             # forward suffix link (inverse of the incoming rslink)
        self.mrp = None               # maximal reach of this node's position id

    def child(self, sym):
        ch = self.children
        return ch.get(sym) if ch else None

    def path_label(self) -> list:
        """Root-to-node label sequence (diagnostic/test use; O(depth))."""
        out = []
        v = self
        while v.parent is not None:
            out.append(v.in_label)
            v = v.parent
        out.reverse()
        return out

    def __repr__(self):
        return f"Node(sid={self.sid}, depth={self.depth}, in={self.in_label!r})"


@dataclass
class TraceStep:
    """Record of one insertion, for construction tracing.

    Node references are sids; ``tested`` lists (sid, label) climb probes in
    order.  ``vprime_sid`` is None when the climb fell past the root.
    """

    char: str
    dist: "int | None"
    start_sid: int
    tested: list = field(default_factory=list)
    vprime_sid: "int | None" = None
    u_sid: int = 0
    z_sid: int = 0
    new_sid: int = 0
    edge_label: "int | str" = 0
    link_label: "int | str" = 0


class Heap:
    """The index under construction; grow with :meth:`push_front`."""

    def __init__(self, alphabet: Alphabet):
        self.alphabet = alphabet
        self.root = Node(0, None, 0, None)
        self.nodes = [self.root]          # indexed by sid
        self.registry = OccRegistry()
        self.static_seen = set()
        self.climb_visits = 0             # link tests from the 2nd insertion on
        self.mrp_visits = 0               # descent steps, set by augmentation
        self.augmented = False
        self.dists = None                 # DistArrays, set by augmentation
        self.preorder = None              # nodes by preorder index, set by augmentation
        self.pre = None                   # preorder interval bounds by sid,
        self.post = None                  # set by augmentation
        self._rev = []                    # text so far, reversed (append = prepend)
        self._prev_dist = []              # by sid-1: previous-occurrence distance, fixed once known
        self._last = self.root            # most recently inserted node

    # -- size / text ----------------------------------------------------

    @property
    def n(self) -> int:
        return len(self._rev)

    def __len__(self) -> int:
        return len(self._rev)

    @property
    def text(self) -> str:
        return "".join(reversed(self._rev))

    # -- id <-> node ----------------------------------------------------

    def node_of_id(self, i: int) -> Node:
        """Node for 1-based text position i (0 gives the root)."""
        if i == 0:
            return self.root
        n = len(self._rev)
        if not 1 <= i <= n:
            raise ValueError(f"position id out of range: {i}")
        return self.nodes[n - i + 1]

    def id_of(self, node: Node) -> int:
        sid = node.sid
        return 0 if sid == 0 else len(self._rev) - sid + 1

    def rslink_count(self) -> int:
        """All reversed suffix links, counting the universal link from the
        conceptual below-root node once."""
        return sum(len(v.rs_out) for v in self.nodes if v.rs_out) + 1

    # -- construction ---------------------------------------------------

    def push_front(self, c: str, trace=None) -> Node:
        """Prepend one character and insert the node for the new front
        position.  Returns the new node."""
        rev = self._rev
        prev_dist = self._prev_dist
        length = len(rev) + 1
        is_param = c in self.alphabet.pi

        d = None
        if is_param:
            # registry ops unrolled (no method calls): this is the hot
            # path, and pushes from here decrease strictly by construction
            reg = self.registry
            front = 1 - length
            j = reg.leftmost.get(c)
            rev.append(c)
            prev_dist.append(None)
            if j is not None:
                d = j - front
                # the old leftmost occurrence of c just gained its
                # previous-occurrence distance, final from here on
                prev_dist[length - d - 1] = d
            reg.leftmost[c] = front
            reg.front = front
        else:
            rev.append(c)
            prev_dist.append(None)
            self.static_seen.add(c)

        step = None
        if trace is not None:
            step = TraceStep(char=c, dist=d, start_sid=self._last.sid)

        # climb from the previously inserted leaf toward the root
        label0 = 0 if is_param else c
        w = self._last
        below = None
        visits = 0
        while True:
            if w is None:
                # conceptual below-root node: matches every label
                visits += 1
                u = self.root
                z = below
                vprime = None
                break
            visits += 1
            lbl = d if (d is not None and w.depth >= d) else label0
            if step is not None:
                step.tested.append((w.sid, lbl))
            ro = w.rs_out
            if ro is not None:
                tgt = ro.get(lbl)
                if tgt is not None:
                    u = tgt
                    z = below
                    vprime = w
                    break
            below = w
            w = w.parent
        if length > 1:
            self.climb_visits += visits + 1  # +1 for moving to the link target
        # the freshly inserted leaf never carries an outgoing link, so the
        # climb moves up at least once before a hit and z is always set
        assert z is not None

        # new node: child of u, edge label read off the new front window
        k = u.depth + 1
        ck = rev[length - k]
        if ck in self.alphabet.pi:
            dk = prev_dist[length - k]
            edge = dk if (dk is not None and dk <= k - 1) else 0
        else:
            edge = ck
        node = Node(length, u, k, edge)
        self.nodes.append(node)
        if u.children is None:
            u.children = {edge: node}
        else:
            u.children[edge] = node

        # exactly one new reversed suffix link, from z to the new node
        if not is_param:
            link_lbl = c
        elif d is not None and d <= k - 1:
            link_lbl = d
        else:
            link_lbl = 0
        if z.rs_out is None:
            z.rs_out = {link_lbl: node}
        else:
            z.rs_out[link_lbl] = node
        node.slink = z

        self._last = node
        self.augmented = False
        if step is not None:
            step.vprime_sid = None if vprime is None else vprime.sid
            step.u_sid = u.sid
            step.z_sid = z.sid
            step.new_sid = node.sid
            step.edge_label = edge
            step.link_label = link_lbl
            trace(step)
        return node


def build(text: str, alphabet: Alphabet, trace=None) -> Heap:
    """Index ``text`` by prepending its characters right to left."""
    h = Heap(alphabet)
    push = h.push_front
    for c in reversed(text):
        push(c, trace)
    return h
