"""Shared oracles, frozen worked examples, and invariant checkers.

Everything here is recomputed from definitions and shares no code with
the package, so each test compares two independent implementations.
"""

import random

# ---------------------------------------------------------------------------
# worked examples (expected values frozen after independent derivation)

STRUCT_TEXT = "axyxyyxxyyxxzyazy"   # the structure walk-through
STRUCT_PI = "xyz"
REACH_TEXT = "xxayxayxayxa"         # the maximal-reach walk-through
REACH_PI = "xy"
QUERY_TEXT = "abzaxxbyaxxbazzax"    # the query walk-through, as printed
QUERY_PI = "xyz"
# The printed query text is internally inconsistent with its own analysis
# (window 8..13 is "yaxxba", not "yaxxbz"); this is the text the analysis
# actually describes.  See notes/decisions.md outside the package.
QUERY_TEXT_FIXED = "abzaxxbyaxxbzzax"

STRUCT_PREV = ["a", 0, 0, 2, 2, 1, 3, 1, 3, 1, 3, 1, 0, 4, "a", 3, 3]

STRUCT_DEPTHS = {17: 1, 16: 2, 15: 1, 14: 2, 13: 3, 12: 3, 11: 2, 10: 3,
                 9: 3, 8: 4, 7: 4, 6: 5, 5: 5, 4: 6, 3: 3, 2: 4, 1: 2}

STRUCT_PARENTS = {17: 0, 16: 17, 15: 0, 14: 17, 13: 16, 12: 16, 11: 17,
                  10: 16, 9: 11, 8: 10, 7: 9, 6: 8, 5: 7, 4: 6, 3: 16,
                  2: 3, 1: 15}

STRUCT_LABELS = {17: [0], 16: [0, 0], 15: ["a"], 4: [0, 0, 1, 3, 1, 3],
                 3: [0, 0, 2], 2: [0, 0, 2, 2], 1: ["a", 0]}

REACH_MRP_DEPTHS = [2, 4, 4, 4, 4, 4, 4, 4, 4, 3, 2, 1]   # positions 1..12


# ---------------------------------------------------------------------------
# definitional reimplementations

def oracle_prev(s, pi):
    """Previous-occurrence encoding, straight from the definition."""
    out, last = [], {}
    for i, c in enumerate(s):
        if c in pi:
            out.append(i - last[c] if c in last else 0)
            last[c] = i
        else:
            out.append(c)
    return out


def oracle_is_pmatch(x, y, pi):
    """Bijection-based p-match test; no prev encoding anywhere."""
    if len(x) != len(y):
        return False
    fwd, bwd = {}, {}
    for a, b in zip(x, y):
        pa, pb = a in pi, b in pi
        if pa != pb:
            return False
        if not pa:
            if a != b:
                return False
            continue
        if fwd.setdefault(a, b) != b or bwd.setdefault(b, a) != a:
            return False
    return True


def oracle_occurrences(text, pattern, pi):
    m = len(pattern)
    return [i for i in range(1, len(text) - m + 2)
            if oracle_is_pmatch(text[i - 1:i - 1 + m], pattern, pi)]


def oracle_sht(text, pi):
    """Sequence hash tree of the prev-encoded suffixes, built from the
    definition: insert each suffix's shortest absent prefix, shortest
    suffix first.  Returns ({id: parent_id}, {id: edge_label})."""
    n = len(text)
    children = {0: {}}
    parent, label = {}, {}
    for length in range(1, n + 1):
        i = n - length + 1               # suffix start = final node id
        s = oracle_prev(text[i - 1:], pi)
        v = 0
        for sym in s:
            nxt = children[v].get(sym)
            if nxt is None:
                children[v][sym] = i
                children[i] = {}
                parent[i] = v
                label[i] = sym
                break
            v = nxt
        else:
            raise AssertionError(f"suffix {i} already fully present")
    return parent, label


def oracle_reach(heap, text, pi, i):
    """Deepest node whose root path spells a prefix of the encoding of
    the suffix starting at i, found by a plain root walk."""
    s = oracle_prev(text[i - 1:], pi)
    v = heap.root
    for sym in s:
        nxt = v.child(sym)
        if nxt is None:
            break
        v = nxt
    return v


# ---------------------------------------------------------------------------
# structural comparisons

def heap_edge_map(heap):
    """{id: (parent_id, edge_label)} over all non-root nodes."""
    out = {}
    for i in range(1, heap.n + 1):
        v = heap.node_of_id(i)
        out[i] = (heap.id_of(v.parent), v.in_label)
    return out


def heap_diff(a, b):
    """Human-readable field differences between two heaps (empty = equal)."""
    diffs = []
    if a.n != b.n:
        return [f"n: {a.n} != {b.n}"]
    if a.text != b.text:
        diffs.append("text differs")
    if sorted(a.alphabet.pi) != sorted(b.alphabet.pi):
        diffs.append("pi differs")
    if a.augmented != b.augmented:
        diffs.append(f"augmented: {a.augmented} != {b.augmented}")
    for i in range(1, a.n + 1):
        va, vb = a.node_of_id(i), b.node_of_id(i)
        if a.id_of(va.parent) != b.id_of(vb.parent):
            diffs.append(f"node {i}: parent {a.id_of(va.parent)} != {b.id_of(vb.parent)}")
        if va.in_label != vb.in_label:
            diffs.append(f"node {i}: edge {va.in_label!r} != {vb.in_label!r}")
        if va.depth != vb.depth:
            diffs.append(f"node {i}: depth {va.depth} != {vb.depth}")
        if a.id_of(va.slink) != b.id_of(vb.slink):
            diffs.append(f"node {i}: slink {a.id_of(va.slink)} != {b.id_of(vb.slink)}")
        ma = None if va.mrp is None else a.id_of(va.mrp)
        mb = None if vb.mrp is None else b.id_of(vb.mrp)
        if ma != mb:
            diffs.append(f"node {i}: mrp {ma} != {mb}")
    for i in range(0, a.n + 1):
        va, vb = a.node_of_id(i), b.node_of_id(i)
        ra = {sym: a.id_of(t) for sym, t in (va.rs_out or {}).items()}
        rb = {sym: b.id_of(t) for sym, t in (vb.rs_out or {}).items()}
        if ra != rb:
            diffs.append(f"node {i}: reversed links {ra} != {rb}")
        if a.augmented and b.augmented:
            ia = (a.pre[va.sid], a.post[va.sid])
            ib = (b.pre[vb.sid], b.post[vb.sid])
            if ia != ib:
                diffs.append(f"node {i}: interval {ia} != {ib}")
    return diffs


def _is_ancestor(anc, node):
    while node is not None:
        if node is anc:
            return True
        node = node.parent
    return False


def check_structure(heap):
    """Every structural invariant in one pass; returns violation strings."""
    errs = []
    n = heap.n
    text = heap.text
    pi = heap.alphabet.pi

    if len(heap.nodes) != n + 1:
        errs.append(f"node count {len(heap.nodes)} != n+1 = {n + 1}")

    # ids strictly decrease downward; every node spells a prefix of its
    # position's suffix encoding
    for i in range(1, n + 1):
        v = heap.node_of_id(i)
        p = heap.id_of(v.parent)
        if p != 0 and not i < p:
            errs.append(f"node {i}: parent id {p} not larger")
        expect = oracle_prev(text[i - 1:], pi)[:v.depth]
        if v.path_label() != expect:
            errs.append(f"node {i}: path {v.path_label()} != {expect}")
        if v.parent.child(v.in_label) is not v:
            errs.append(f"node {i}: not its parent's {v.in_label!r} child")

    # exact tree shape: equality with the definitional sequence hash tree
    parent, label = oracle_sht(text, pi)
    got = heap_edge_map(heap)
    want = {i: (parent[i], label[i]) for i in parent}
    if got != want:
        bad = [i for i in want if got.get(i) != want[i]]
        errs.append(f"tree differs from the definitional build at ids {bad}")

    # reversed suffix links: one incoming per non-root node, labels
    # consistent with the one-character-extension rule, and source/target
    # depths in lockstep
    incoming = {}
    for src in heap.nodes:
        for a, tgt in (src.rs_out or {}).items():
            if heap.id_of(tgt) in incoming:
                errs.append(f"node {heap.id_of(tgt)}: two incoming links")
            incoming[heap.id_of(tgt)] = (a, src)
            lv, lu = src.path_label(), tgt.path_label()
            if isinstance(a, str) or a == 0:
                ok = lu == [a if isinstance(a, str) else 0] + lv
            else:
                ok = (len(lv) >= a and lv[a - 1] == 0
                      and lu == [0] + lv[:a - 1] + [a] + lv[a:])
            if not ok:
                errs.append(f"link {a!r}: {lv} -> {lu} breaks the label rule")
            if tgt.slink is not src:
                errs.append(f"node {heap.id_of(tgt)}: slink does not invert its link")
            if src.depth != tgt.depth - 1:
                errs.append(f"link into {heap.id_of(tgt)}: source depth off")
    if set(incoming) != set(range(1, n + 1)):
        errs.append("some non-root node lacks an incoming link")
    if heap.rslink_count() != n + 1:
        errs.append(f"rslink_count {heap.rslink_count()} != n+1 = {n + 1}")

    # monotonicity: same-label links from ancestor pairs point to
    # ancestor-ordered targets
    for src in heap.nodes:
        for a, tgt in (src.rs_out or {}).items():
            anc = src.parent
            while anc is not None:
                other = (anc.rs_out or {}).get(a)
                if other is not None and not _is_ancestor(other, tgt):
                    errs.append(f"label {a!r}: ancestor link target not an ancestor")
                anc = anc.parent

    # the climb counter is an exact telescope
    if n >= 1:
        expect = 4 * (n - 1) + 1 - heap.node_of_id(1).depth
        if heap.climb_visits != expect:
            errs.append(f"climb_visits {heap.climb_visits} != {expect}")
    elif heap.climb_visits:
        errs.append("climb_visits nonzero on empty heap")
    return errs


def check_reaches(heap):
    """Maximal reach pointers against a per-position root re-walk."""
    errs = []
    text, pi = heap.text, heap.alphabet.pi
    for i in range(1, heap.n + 1):
        v = heap.node_of_id(i)
        want = oracle_reach(heap, text, pi, i)
        if v.mrp is not want:
            errs.append(f"reach {i}: {heap.id_of(v.mrp)} != {heap.id_of(want)}")
    n = heap.n
    if n >= 1:
        expect = (heap.node_of_id(n).mrp.depth - heap.node_of_id(1).mrp.depth
                  + 2 * (n - 1))
        if heap.mrp_visits != expect:
            errs.append(f"mrp_visits {heap.mrp_visits} != {expect}")
    return errs


# ---------------------------------------------------------------------------
# input generation (kept local so tests do not lean on the package's own
# fuzzing helpers)

STATICS = "abcd"
PARAMS = "WXYZ"


def rand_text(rng, max_n, sigma, pi_size):
    pool = STATICS[:sigma] + PARAMS[:pi_size]
    return "".join(rng.choice(pool) for _ in range(rng.randint(0, max_n)))


def rand_pattern(rng, text, sigma, pi_size, max_m=20):
    pool = STATICS[:sigma] + PARAMS[:pi_size]
    n = len(text)
    mode = rng.randrange(3) if n else 2
    if mode < 2:
        m = rng.randint(1, min(max_m, n))
        i = rng.randrange(n - m + 1)
        window = list(text[i:i + m])
        if mode == 1:
            window[rng.randrange(m)] = rng.choice(pool)
        return "".join(window)
    return "".join(rng.choice(pool) for _ in range(rng.randint(1, max_m)))


ALPHABET_GRID = [(0, 4), (4, 0), (1, 1), (2, 2), (3, 1), (1, 3), (4, 4),
                 (2, 0), (0, 2), (3, 3)]


def fuzz_corpus(seed=0, per_combo=30, max_n=120):
    """A deterministic stream of (text, pi_string) construction inputs."""
    rng = random.Random(seed)
    out = [(STRUCT_TEXT, STRUCT_PI), (REACH_TEXT, REACH_PI),
           (QUERY_TEXT, QUERY_PI), (QUERY_TEXT_FIXED, QUERY_PI),
           ("", "xy"), ("a", ""), ("X", "X"), ("aaaa", ""), ("XXXX", "X")]
    for sigma, pi_size in ALPHABET_GRID:
        if sigma + pi_size == 0:
            continue
        for _ in range(per_combo):
            out.append((rand_text(rng, max_n, sigma, pi_size), PARAMS[:pi_size]))
    return out
