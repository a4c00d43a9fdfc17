"""Parameterized pattern matching over an augmented heap.

A pattern occurrence at position i means the length-m window of the text
starting at i p-matches the pattern, i.e. the window's prev encoding
equals the pattern's.  Because the trie only stores each suffix's
shortest absent prefix, a whole window encoding is rarely spelled by one
root path; the matcher instead cuts the pattern greedily into segments,
each as deep a root walk as the trie allows, re-encoding the remainder at
every cut (a cut only zeroes distance entries that pointed across it).

With a single segment the walk's end node certifies the full window:
every position id in its subtree matches outright, and a position id on
the root path matches exactly when its maximal reach falls inside the
subtree.  With r >= 2 segments, every occurrence's first-segment reach is
exactly the segment-1 end node, so the root-path ids with that reach are
the only candidates; each is then verified segment by segment:

  * reach check: the reach of the candidate's segment-t start position
    must equal the segment's end node (final segment: lie in its subtree);
    this certifies all symbols the re-encoded walk could see, and -- being
    checked first -- guarantees the window stays inside the text;
  * crossing distances (segment symbol Dist(e) with e reaching across the
    cut): the walk only certified a zero there, so the text's own
    previous-occurrence distance must equal e exactly;
  * zero entries (segment symbol Dist(0), segments after the first): the
    walk only certified "no repeat inside the segment window"; the text
    distance must be absent or reach past the whole window prefix.

Together these force window symbol s to equal pattern symbol s for every
s, so verified candidates are exactly the occurrences.
"""

from dataclasses import dataclass, field

from .augment import augment, subtree_contains
from .encoding import Alphabet, prev_encode, reencode_at
from .heap import Heap, Node


class EmptyPatternError(ValueError):
    """Raised for zero-length patterns: every position would match."""


@dataclass
class Segment:
    """One greedy cut of the pattern: the walk that consumed symbols
    cut+1 .. cut+length of the re-encoded remainder, ending at ``node``."""

    cut: int
    length: int
    node: Node
    path: list                                  # non-root nodes, root walk order
    b_checks: list = field(default_factory=list)  # (s, e): crossing distances
    z_checks: list = field(default_factory=list)  # s: zero entries


def segment_pattern(heap: Heap, q: list):
    """Cut the encoded pattern greedily; None when some segment consumes
    nothing (that symbol labels no root edge, so nothing can match)."""
    m = len(q)
    segments = []
    cut = 0
    while cut < m:
        w = heap.root
        path = []
        length = 0
        while cut + length < m:
            sym = reencode_at(q, cut, length + 1)
            ch = w.children
            nxt = ch.get(sym) if ch else None
            if nxt is None:
                break
            w = nxt
            path.append(w)
            length += 1
        if length == 0:
            return None
        b_checks = []
        z_checks = []
        for off in range(1, length + 1):
            s = cut + off
            e = q[s - 1]
            if isinstance(e, int):
                if e == 0:
                    z_checks.append(s)
                elif e >= off:
                    b_checks.append((s, e))
        segments.append(Segment(cut, length, w, path, b_checks, z_checks))
        cut += length
    return segments


def match(heap: Heap, pattern: str) -> list:
    """All 1-based occurrence positions of ``pattern``, ascending."""
    if len(pattern) == 0:
        raise EmptyPatternError("empty pattern")
    augment(heap)
    q = prev_encode(pattern, heap.alphabet)
    segments = segment_pattern(heap, q)
    if segments is None:
        return []
    first = segments[0]
    v1 = first.node
    n = heap.n

    if len(segments) == 1 and first.length == len(q):
        # whole encoding on one root path: subtree ids match outright
        lo, hi = heap.pre[v1.sid], heap.post[v1.sid]
        out = [heap.id_of(w) for w in heap.preorder[lo:hi + 1]]
        for w in first.path[:-1]:  # strict ancestors of v1 on the path
            if subtree_contains(heap, v1, w.mrp):
                out.append(heap.id_of(w))
        out.sort()
        return out

    last = segments[-1]
    dists = heap.dists
    prev_d = dists.prev
    is_par = dists.is_param
    nodes = heap.nodes
    out = []
    for wc in first.path:
        if wc.mrp is not v1:
            continue
        i = heap.id_of(wc)
        ok = True
        for seg in segments[1:]:
            p = i + seg.cut
            if p > n:
                ok = False
                break
            reach = nodes[n - p + 1].mrp
            # reach first: it bounds the window inside the text, making
            # the distance-array reads below safe
            if seg is last:
                if not subtree_contains(heap, seg.node, reach):
                    ok = False
                    break
            elif reach is not seg.node:
                ok = False
                break
            for s, e in seg.b_checks:
                pos = i + s - 1
                if not (is_par[pos] and prev_d[pos] == e):
                    ok = False
                    break
            if not ok:
                break
            for s in seg.z_checks:
                dp = prev_d[i + s - 1]
                if dp is not None and dp < s:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(i)
    out.sort()
    return out


def naive_match(text: str, pattern: str, alphabet: Alphabet) -> list:
    """Oracle matcher: encode every window and compare.  O(n*m)."""
    if len(pattern) == 0:
        raise EmptyPatternError("empty pattern")
    m = len(pattern)
    q = prev_encode(pattern, alphabet)
    return [i for i in range(1, len(text) - m + 2)
            if prev_encode(text[i - 1:i - 1 + m], alphabet) == q]
