"""graph6 text codec.

One graph per line; byte c encodes the 6-bit value c-63. The header
">>graph6<<" is accepted and skipped on input. Supports orders up to
258047 (one- and four-byte size prefixes), far beyond anything this
package enumerates.
"""

from __future__ import annotations

from dalpha.errors import Graph6Error
from dalpha.graphs import Graph

_HEADER = ">>graph6<<"


def _sextets(text: str, start: int):
    for pos in range(start, len(text)):
        c = ord(text[pos])
        if not (63 <= c <= 126):
            raise Graph6Error(f"invalid graph6 byte {text[pos]!r}", pos)
        yield c - 63


def parse_graph6(line: str) -> Graph:
    """Decode a single graph6 line into a Graph."""
    text = line.rstrip("\n")
    if text.startswith(_HEADER):
        text = text[len(_HEADER):]
    if not text:
        raise Graph6Error("empty graph6 line", 0)
    vals = []
    offset = 0
    for v in _sextets(text, 0):
        vals.append(v)
    if vals[0] < 63:
        n = vals[0]
        body = vals[1:]
        offset = 1
    else:
        if len(vals) < 4:
            raise Graph6Error("truncated multi-byte order prefix", len(text))
        if vals[1] == 63:
            raise Graph6Error("order >= 258048 not supported", 1)
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        body = vals[4:]
        offset = 4
    if n < 1:
        raise Graph6Error(f"graph6 order must be >= 1, got {n}", 0)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) < need:
        raise Graph6Error(f"truncated edge data: need {need} bytes, got {len(body)}", len(text))
    if len(body) > need:
        raise Graph6Error("trailing bytes after edge data", offset + need)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    if need:
        pad = body[-1] & ((1 << (6 * need - nbits)) - 1)
        if pad:
            raise Graph6Error("nonzero padding bits", offset + need - 1)
    return Graph(n, edges)


def emit_graph6(g: Graph) -> str:
    """Encode a Graph as a graph6 line (no trailing newline)."""
    n = g.n
    if n <= 62:
        head = [chr(63 + n)]
    elif n <= 258047:
        head = ["~", chr(63 + (n >> 12)), chr(63 + ((n >> 6) & 63)), chr(63 + (n & 63))]
    else:
        raise Graph6Error(f"order {n} too large for this encoder", 0)
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    out = head
    for base in range(0, len(bits), 6):
        chunk = bits[base:base + 6]
        chunk += [0] * (6 - len(chunk))
        val = 0
        for b in chunk:
            val = (val << 1) | b
        out.append(chr(63 + val))
    return "".join(out)


def parse_graph6_lines(lines) -> list:
    """Decode an iterable of graph6 lines, skipping blanks and comments.

    Returns (line_number, Graph) pairs, 1-based; a malformed line yields
    (line_number, Graph6Error) instead of aborting the batch."""
    out = []
    for i, line in enumerate(lines, start=1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        try:
            out.append((i, parse_graph6(s)))
        except Graph6Error as e:
            out.append((i, e))
    return out
