"""Prev-encoding of parameterized strings.

A p-string draws its characters from two disjoint alphabets: static
characters, which must match literally, and parameter characters, which
may be renamed by any one-to-one substitution.  Two equal-length strings
p-match when such a renaming maps one onto the other.

The prev encoding turns p-matching into plain equality: every static
character stays itself, and every parameter character is replaced by the
distance to its previous occurrence (0 at its first occurrence).  For
example with parameters {x, y, z}:

    prev("axbzzayx") = a 0 b 0 1 a 0 6

Encoded symbols are represented as ``int`` (a distance) or a length-1
``str`` (a static character).  Distances order before statics, ascending
within each kind; ``encsym_sort_key`` realizes that total order.

Positions are 1-based in every public signature, matching the usual
convention for text indexing.
"""

from dataclasses import dataclass, field

EncSym = "int | str"  # type alias for documentation; runtime checks use isinstance


class Alphabet:
    """Declares the parameter characters; everything else is static."""

    __slots__ = ("pi",)

    def __init__(self, pi_chars=""):
        self.pi = frozenset(pi_chars)

    def is_param(self, c: str) -> bool:
        return c in self.pi

    def __eq__(self, other):
        return isinstance(other, Alphabet) and self.pi == other.pi

    def __hash__(self):
        return hash(self.pi)

    def __repr__(self):
        return f"Alphabet({''.join(sorted(self.pi))!r})"


def encsym_sort_key(sym):
    """Total order on encoded symbols: distances first (ascending), then
    static characters (ascending code point)."""
    if isinstance(sym, int):
        return (0, sym, "")
    return (1, 0, sym)


def format_encsym(sym) -> str:
    """Human-readable form used in DOT labels and error messages."""
    return str(sym)


def prev_encode(s: str, alphabet: Alphabet) -> list:
    """Encode a p-string: static characters verbatim, parameter characters
    as the distance to their previous occurrence (0 if none)."""
    pi = alphabet.pi
    last: dict = {}
    out = []
    for idx, c in enumerate(s):
        if c in pi:
            prev_idx = last.get(c)
            out.append(0 if prev_idx is None else idx - prev_idx)
            last[c] = idx
        else:
            out.append(c)
    return out


@dataclass
class DistArrays:
    """Per-position occurrence distances for a fixed text.

    ``prev[p]`` / ``next[p]`` give the distance from 1-based position p to
    the nearest earlier / later occurrence of the same parameter character
    (None when absent or when the character is static); ``is_param[p]``
    classifies the character.  Index 0 is padding so positions map
    directly.
    """

    prev: list
    next: list
    is_param: list

    def __len__(self):
        return len(self.prev) - 1


def build_dist_arrays(text: str, alphabet: Alphabet) -> DistArrays:
    """Scan the text once in each direction to fill the distance arrays."""
    n = len(text)
    pi = alphabet.pi
    prev_d = [None] * (n + 1)
    next_d = [None] * (n + 1)
    is_par = [False] * (n + 1)
    last: dict = {}
    for p in range(1, n + 1):
        c = text[p - 1]
        if c in pi:
            is_par[p] = True
            j = last.get(c)
            if j is not None:
                prev_d[p] = p - j
                next_d[j] = p - j
            last[c] = p
    return DistArrays(prev_d, next_d, is_par)


def window_prev_at(text: str, dists: DistArrays, i: int, s: int):
    """Symbol s of the encoding of the window of ``text`` starting at i.

    Equals prev_encode(text[i..])[s] without materializing the suffix: a
    static character stays itself; a parameter character encodes to its
    global previous-occurrence distance when that occurrence falls inside
    the window (distance <= s-1), else to 0.
    """
    p = i + s - 1
    if not (1 <= i and 1 <= s and p < len(dists.prev)):
        raise ValueError(f"window offset out of range: i={i}, s={s}")
    if not dists.is_param[p]:
        return text[p - 1]
    d = dists.prev[p]
    if d is not None and d <= s - 1:
        return d
    return 0


def reencode_at(q: list, cut: int, u: int):
    """Symbol u of the encoding of the pattern suffix that starts after
    ``cut`` consumed symbols.

    Dropping a prefix of a p-string only zeroes the distance entries that
    pointed across the cut; statics and shorter distances survive:
    q[cut+u] is kept when static or when its distance fits inside the
    suffix window (<= u-1), and becomes 0 otherwise.
    """
    sym = q[cut + u - 1]
    if isinstance(sym, int) and sym > u - 1:
        return 0
    return sym


@dataclass
class OccRegistry:
    """Leftmost registered occurrence of each parameter character while a
    text grows leftward.

    Positions must be pushed in strictly decreasing order (the text is
    extended at the front); only differences of positions are ever used,
    so any consistent coordinate system works.
    """

    leftmost: dict = field(default_factory=dict)
    front: "int | None" = None

    def push_front(self, pos: int, c: str) -> None:
        if self.front is not None and pos >= self.front:
            raise ValueError(f"positions must strictly decrease: {pos} after {self.front}")
        self.front = pos
        self.leftmost[c] = pos

    def next_dist(self, front: int, c: str):
        """Distance from a prospective new front position to the leftmost
        registered occurrence of character c, or None if unregistered."""
        j = self.leftmost.get(c)
        return None if j is None else j - front
