"""digraph6 encoding of mixed graphs (edges written as digons).

Format: optional ">>digraph6<<" header, optional '&' type marker, one size
character 63+n (n <= 62 here), then ceil(n*n/6) payload characters.  Each
payload character carries six bits of the row-major adjacency matrix, most
significant bit first, offset by 63.

Decoding turns every symmetric off-diagonal pair back into an edge, so a
graph containing both edges and a true digon cannot round-trip; encode()
rejects it instead of silently merging.
"""

from __future__ import annotations

from .core import MixedGraph

HEADER = ">>digraph6<<"


class CodecError(ValueError):
    """Base class for digraph6 codec failures."""


class BadLengthError(CodecError):
    pass


class BadCharacterError(CodecError):
    pass


class SizeOverflowError(CodecError):
    pass


class HasEdgeDigonAmbiguityError(CodecError):
    """Graph has both edges and a true digon: digraph6 would be lossy."""


def decode(text: str) -> MixedGraph:
    """Decode a digraph6 string into a mixed graph."""
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    if s.startswith("&"):
        s = s[1:]
    if not s:
        raise BadLengthError("empty digraph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise BadCharacterError(f"character {ch!r} outside 63..126")
    n = ord(s[0]) - 63
    if n > 62:
        raise SizeOverflowError("multi-byte size fields are not supported")
    payload = s[1:]
    need = (n * n + 5) // 6
    if len(payload) != need:
        raise BadLengthError(
            f"payload holds {len(payload)} characters, expected {need} for n={n}"
        )
    bits = []
    for ch in payload:
        val = ord(ch) - 63
        bits.extend((val >> shift) & 1 for shift in range(5, -1, -1))
    if any(bits[n * n:]):
        raise BadCharacterError("nonzero padding bits")

    adj = [[bits[i * n + j] for j in range(n)] for i in range(n)]
    edges = []
    arcs = []
    for i in range(n):
        if adj[i][i]:
            arcs.append((i, i))
        for j in range(i + 1, n):
            if adj[i][j] and adj[j][i]:
                edges.append((i, j))
            elif adj[i][j]:
                arcs.append((i, j))
            elif adj[j][i]:
                arcs.append((j, i))
    return MixedGraph(n, edges, arcs)


def encode(g: MixedGraph, emit_amp: bool = False) -> str:
    """Encode a mixed graph; edges become digons.

    emit_amp selects the standard '&'-prefixed style; without it the bare
    style used by published tables is produced.
    """
    if g.n > 62:
        raise SizeOverflowError("only single-byte sizes (n <= 62) are supported")
    if g.edges and g.digons_and_loops()[0] > 0:
        raise HasEdgeDigonAmbiguityError(
            "graph mixes edges with a true digon; use the plain-text format"
        )
    n = g.n
    bits = [0] * (n * n)
    for (u, v) in g.edges:
        bits[u * n + v] = 1
        bits[v * n + u] = 1
    for (u, v) in g.arcs:
        bits[u * n + v] = 1
    chars = [chr(63 + n)]
    for i in range(0, n * n, 6):
        chunk = bits[i:i + 6]
        chunk += [0] * (6 - len(chunk))
        val = 0
        for b in chunk:
            val = (val << 1) | b
        chars.append(chr(63 + val))
    return ("&" if emit_amp else "") + "".join(chars)
