"""Line-oriented index file format.

::

    PPHv1
    n <length>
    pi <parameter characters, sorted>
    augmented <0|1>
    text <the indexed text>
    node <id> <parentId|-> <edgeLabel|-> <slinkId|-> <mrpId|->   (ids 0..n)

Edge labels are ``s:<char>`` (static) or ``d:<int>`` (distance); ``-``
marks an absent field (the root's, or maximal reaches when not
augmented).  The text is stored because queries need the text's own
occurrence distances, which the trie provably does not determine.  The
conceptual below-root node is never serialized; reversed suffix links are
not stored either -- each node's forward suffix link pins the source, and
the label is recomputed from the node's root path (a static first symbol
is the label; otherwise the unique offset k with symbol Dist(k-1), if
any, gives Dist(k-1), else Dist(0)).

Backslash escapes keep the format line- and token-safe: ``\\``, ``\n``,
``\r`` in the pi/text lines and edge labels, plus ``\s`` for a space
inside an edge label.  Output is byte-deterministic for a given heap.
"""

from .augment import compute_preorder
from .encoding import Alphabet, build_dist_arrays
from .heap import Heap, Node

MAGIC = "PPHv1"


class ParseError(ValueError):
    """A malformed line; ``line`` is its 1-based number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class IntegrityError(ValueError):
    """Well-formed lines describing an impossible structure."""


def _escape(s: str, space: bool = False) -> str:
    s = s.replace("\\", "\\\\").replace("\n", "\\n").replace("\r", "\\r")
    if space:
        s = s.replace(" ", "\\s")
    return s


_UNESCAPE = {"\\": "\\", "n": "\n", "r": "\r", "s": " "}


def _unescape(s: str, line: int) -> str:
    out = []
    i = 0
    while i < len(s):
        c = s[i]
        if c == "\\":
            if i + 1 >= len(s) or s[i + 1] not in _UNESCAPE:
                raise ParseError(line, f"bad escape in {s!r}")
            out.append(_UNESCAPE[s[i + 1]])
            i += 2
        else:
            out.append(c)
            i += 1
    return "".join(out)


def _format_edge(sym) -> str:
    if isinstance(sym, int):
        return f"d:{sym}"
    return "s:" + _escape(sym, space=True)


def _parse_edge(tok: str, line: int):
    if tok.startswith("d:"):
        try:
            return int(tok[2:])
        except ValueError:
            raise ParseError(line, f"bad distance label {tok!r}") from None
    if tok.startswith("s:"):
        c = _unescape(tok[2:], line)
        if len(c) != 1:
            raise ParseError(line, f"static label must be one character: {tok!r}")
        return c
    raise ParseError(line, f"bad edge label {tok!r}")


def serialize(heap: Heap) -> str:
    """Render the heap to the index file format (deterministic)."""
    n = heap.n
    nodes = heap.nodes
    aug = heap.augmented
    lines = [
        MAGIC,
        f"n {n}",
        "pi " + _escape("".join(sorted(heap.alphabet.pi))),
        f"augmented {1 if aug else 0}",
        "text " + _escape(heap.text),
        "node 0 - - - -",
    ]
    for ext in range(1, n + 1):
        v = nodes[n - ext + 1]
        parent = heap.id_of(v.parent)
        slink = heap.id_of(v.slink)
        mrp = heap.id_of(v.mrp) if aug else "-"
        lines.append(f"node {ext} {parent} {_format_edge(v.in_label)} {slink} {mrp}")
    return "\n".join(lines) + "\n"


def _int_field(tok: str, line: int, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(line, f"bad {what} {tok!r}") from None


def deserialize(data: str) -> Heap:
    """Parse an index file back into a heap.

    Raises :class:`ParseError` for malformed lines and
    :class:`IntegrityError` for structurally impossible contents.
    """
    lines = data.split("\n")
    if lines and lines[-1] == "":
        lines.pop()

    def header(idx: int, key: str) -> str:
        if idx >= len(lines):
            raise ParseError(idx + 1, f"missing {key!r} line")
        ln = lines[idx]
        if ln != key and not ln.startswith(key + " "):
            raise ParseError(idx + 1, f"expected {key!r} line, got {ln!r}")
        return ln[len(key) + 1:]

    if not lines or lines[0] != MAGIC:
        raise ParseError(1, f"missing {MAGIC} magic line")
    n = _int_field(header(1, "n"), 2, "length")
    if n < 0:
        raise IntegrityError(f"negative length {n}")
    pi_chars = _unescape(header(2, "pi"), 3)
    aug_tok = header(3, "augmented")
    if aug_tok not in ("0", "1"):
        raise ParseError(4, f"augmented must be 0 or 1, got {aug_tok!r}")
    augmented = aug_tok == "1"
    text = _unescape(header(4, "text"), 5)
    if len(text) != n:
        raise IntegrityError(f"text length {len(text)} != n {n}")

    node_lines = lines[5:]
    if len(node_lines) != n + 1:
        raise IntegrityError(f"expected {n + 1} node lines, found {len(node_lines)}")

    # pass 1: parse every line into raw fields
    raw = []
    for k, ln in enumerate(node_lines):
        lineno = 6 + k
        toks = ln.split(" ")
        if len(toks) != 6 or toks[0] != "node":
            raise ParseError(lineno, f"bad node line {ln!r}")
        ext = _int_field(toks[1], lineno, "node id")
        if ext != k:
            raise IntegrityError(f"node ids must ascend 0..{n}, got {ext} at line {lineno}")
        parent = None if toks[2] == "-" else _int_field(toks[2], lineno, "parent id")
        edge = None if toks[3] == "-" else _parse_edge(toks[3], lineno)
        slink = None if toks[4] == "-" else _int_field(toks[4], lineno, "slink id")
        mrp = None if toks[5] == "-" else _int_field(toks[5], lineno, "mrp id")
        raw.append((parent, edge, slink, mrp))

    alphabet = Alphabet(pi_chars)
    heap = Heap(alphabet)
    if raw[0] != (None, None, None, None):
        raise IntegrityError("root line must be 'node 0 - - - -'")

    nodes_by_sid = [heap.root] + [
        Node(n - ext + 1, None, 0, None) for ext in range(n, 0, -1)
    ]
    nodes_by_sid.sort(key=lambda v: v.sid)

    def by_ext(ext: int) -> Node:
        return heap.root if ext == 0 else nodes_by_sid[n - ext + 1]

    # pass 2: wire in descending id order so parents exist before children
    first_sym = [None] * (n + 1)   # by sid
    d_mark = [None] * (n + 1)
    for ext in range(n, 0, -1):
        parent_ext, edge, slink_ext, mrp_ext = raw[ext]
        if parent_ext is None or edge is None or slink_ext is None:
            raise IntegrityError(f"node {ext} is missing parent, edge, or slink")
        if not (parent_ext == 0 or parent_ext > ext) or parent_ext > n:
            raise IntegrityError(f"node {ext}: parent {parent_ext} breaks the id order")
        v = by_ext(ext)
        p = by_ext(parent_ext)
        v.parent = p
        v.depth = p.depth + 1
        v.in_label = edge
        if isinstance(edge, int) and not 0 <= edge <= v.depth - 1:
            raise IntegrityError(f"node {ext}: distance label {edge} exceeds depth {v.depth}")
        if p.children is None:
            p.children = {}
        if edge in p.children:
            raise IntegrityError(f"node {parent_ext}: duplicate child label {edge!r}")
        p.children[edge] = v

        sid = v.sid
        psid = p.sid
        if psid == 0:
            first_sym[sid] = edge
            mark = None
        else:
            first_sym[sid] = first_sym[psid]
            mark = d_mark[psid]
        if mark is None and isinstance(edge, int) and v.depth >= 2 and edge == v.depth - 1:
            mark = edge
        d_mark[sid] = mark

        if not 0 <= slink_ext <= n or slink_ext == ext:
            raise IntegrityError(f"node {ext}: bad slink target {slink_ext}")
        z = by_ext(slink_ext)
        fs = first_sym[sid]
        label = fs if isinstance(fs, str) else (mark if mark is not None else 0)
        if z.rs_out is None:
            z.rs_out = {}
        if label in z.rs_out:
            raise IntegrityError(f"node {slink_ext}: duplicate reversed link label {label!r}")
        z.rs_out[label] = v
        v.slink = z

        if mrp_ext is not None and not augmented:
            raise IntegrityError(f"node {ext}: maximal reach present but not augmented")
        if augmented:
            if mrp_ext is None:
                raise IntegrityError(f"node {ext}: augmented file lacks maximal reach")
            if not 1 <= mrp_ext <= n:
                raise IntegrityError(f"node {ext}: bad maximal reach target {mrp_ext}")
            v.mrp = by_ext(mrp_ext)

    for ext in range(1, n + 1):
        v = by_ext(ext)
        if v.slink.depth != v.depth - 1:
            raise IntegrityError(f"node {ext}: slink target depth {v.slink.depth}, "
                                 f"expected {v.depth - 1}")

    # rebuild the construction-side state so the heap stays growable
    heap.nodes = nodes_by_sid
    heap._rev = list(reversed(text))
    dists = build_dist_arrays(text, alphabet)
    heap._prev_dist = [dists.prev[n - sid + 1] for sid in range(1, n + 1)]
    for p in range(n, 0, -1):
        c = text[p - 1]
        if c in alphabet.pi:
            heap.registry.push_front(p - n, c)
        else:
            heap.static_seen.add(c)
    heap._last = nodes_by_sid[n] if n else heap.root
    if augmented:
        heap.dists = dists
        compute_preorder(heap)
        heap.augmented = True
    return heap
