"""Graphviz rendering of a heap.

Tree edges are solid and labeled with their encoded symbol; reversed
suffix links are dashed red (shown on request, including the single
universal link from the conceptual below-root node, drawn as ``bot``);
maximal reach pointers are bold (shown on request, self-pointers
omitted).  Output is byte-deterministic: nodes in id order, edges in
encoded-symbol order.
"""

from .encoding import encsym_sort_key, format_encsym
from .heap import Heap


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(heap: Heap, rslinks: bool = False, mrp: bool = False) -> str:
    """Render the heap; ``rslinks``/``mrp`` toggle the two overlays."""
    n = heap.n
    nodes = heap.nodes

    def name(v) -> str:
        return f"n{heap.id_of(v)}"

    out = ["digraph pph {", "  node [shape=circle];"]
    if rslinks:
        out.append('  bot [label="\\u22a5", shape=plaintext];')
    for ext in range(0, n + 1):
        v = nodes[0] if ext == 0 else nodes[n - ext + 1]
        out.append(f"  {name(v)} [label={_quote(str(ext))}];")
    for ext in range(0, n + 1):
        v = nodes[0] if ext == 0 else nodes[n - ext + 1]
        ch = v.children
        if ch:
            for sym in sorted(ch, key=encsym_sort_key):
                out.append(f"  {name(v)} -> {name(ch[sym])} "
                           f"[label={_quote(format_encsym(sym))}];")
    if rslinks:
        out.append('  bot -> n0 [style=dashed, color=red, label="*"];')
        for ext in range(0, n + 1):
            v = nodes[0] if ext == 0 else nodes[n - ext + 1]
            ro = v.rs_out
            if ro:
                for sym in sorted(ro, key=encsym_sort_key):
                    out.append(f"  {name(v)} -> {name(ro[sym])} [style=dashed, "
                               f"color=red, label={_quote(format_encsym(sym))}];")
    if mrp and heap.augmented:
        for ext in range(1, n + 1):
            v = nodes[n - ext + 1]
            if v.mrp is not None and v.mrp is not v:
                out.append(f"  {name(v)} -> {name(v.mrp)} [style=bold];")
    out.append("}")
    return "\n".join(out) + "\n"
