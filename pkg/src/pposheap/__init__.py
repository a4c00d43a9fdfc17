"""pposheap: a right-to-left online parameterized position heap.

Index a text over mixed static/parameter alphabets, then find every
window that matches a pattern up to one-to-one renaming of the parameter
characters.

>>> from pposheap import Alphabet, build, match
>>> heap = build("abzaxxbyaxxbzzax", Alphabet("xyz"))
>>> match(heap, "yazzbx")
[3, 8]
"""

from .augment import augment, compute_mrp, compute_preorder, subtree_contains
from .dot import export_dot
from .encoding import (Alphabet, DistArrays, OccRegistry, build_dist_arrays,
                       encsym_sort_key, prev_encode, reencode_at,
                       window_prev_at)
from .fuzzing import fuzz_alphabet, random_pstring, verify_random
from .heap import Heap, Node, TraceStep, build
from .query import EmptyPatternError, Segment, match, naive_match, segment_pattern
from .serialize import IntegrityError, ParseError, deserialize, serialize

__version__ = "0.1.0"

__all__ = [
    "Alphabet", "DistArrays", "OccRegistry", "build_dist_arrays",
    "encsym_sort_key", "prev_encode", "reencode_at", "window_prev_at",
    "Heap", "Node", "TraceStep", "build",
    "augment", "compute_mrp", "compute_preorder", "subtree_contains",
    "EmptyPatternError", "Segment", "match", "naive_match", "segment_pattern",
    "IntegrityError", "ParseError", "deserialize", "serialize",
    "export_dot", "fuzz_alphabet", "random_pstring", "verify_random",
    "__version__",
]
