"""graph6 and edge-list serialization, and lazy catalog streaming."""

from __future__ import annotations

import sys
from collections.abc import Iterator
from dataclasses import dataclass, field
from pathlib import Path
from typing import BinaryIO, Optional, Union

from .graph import Graph, GraphInputError

GRAPH6 = "graph6"
EDGE_LIST_MULTI = "edge-list-multi"

GRAPH6_HEADER = b">>graph6<<"
DEFAULT_MAX_ORDER = 1 << 12


class Graph6Error(ValueError):
    pass


class EdgeListError(ValueError):
    pass


class CatalogError(ValueError):
    def __init__(self, message: str, index: int, offset: int):
        super().__init__(f"entry {index} at byte {offset}: {message}")
        self.index = index
        self.offset = offset


# --- graph6 ----------------------------------------------------------------


def _encode_order(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n < 258048:
        return bytes([126] + [(n >> s & 63) + 63 for s in (12, 6, 0)])
    if n < 1 << 36:
        return bytes([126, 126] + [(n >> s & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise Graph6Error(f"order {n} too large for graph6")


def _decode_order(data: bytes) -> tuple[int, int]:
    """Return ``(n, header_length)``."""
    if not data:
        raise Graph6Error("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise Graph6Error("truncated 8-byte order header")
        n = 0
        for b in data[2:8]:
            n = n << 6 | (b - 63)
        if n < 258048:
            raise Graph6Error("non-minimal 8-byte order header")
        return n, 8
    if len(data) < 4:
        raise Graph6Error("truncated 4-byte order header")
    n = 0
    for b in data[1:4]:
        n = n << 6 | (b - 63)
    if n < 63:
        raise Graph6Error("non-minimal 4-byte order header")
    return n, 4


def write_graph6(g: Graph) -> str:
    """Encode ``g``: upper-triangle bits ``(i, j)``, ``i < j``, column by column."""
    n = g.order
    out = bytearray(_encode_order(n))
    acc = 0
    nbits = 0
    for j in range(1, n):
        row = g.adj[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return out.decode("ascii")


def parse_graph6(line: Union[str, bytes], max_order: Optional[int] = None) -> Graph:
    data = line.encode("ascii") if isinstance(line, str) else bytes(line)
    data = data.rstrip(b"\r\n")
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER):]
    for b in data:
        if not 63 <= b <= 126:
            raise Graph6Error(f"byte {b} outside the printable range 63..126")
    n, head = _decode_order(data)
    if n < 1:
        raise Graph6Error("graph6 order must be at least 1")
    if max_order is not None and n > max_order:
        raise Graph6Error(f"order {n} exceeds configured maximum {max_order}")
    nbits = n * (n - 1) // 2
    body = data[head:]
    if len(body) != (nbits + 5) // 6:
        raise Graph6Error(f"expected {(nbits + 5) // 6} data bytes for n={n}, got {len(body)}")
    adj = [0] * n
    k = 0
    i, j = 0, 1
    for b in body:
        value = b - 63
        for shift in range(5, -1, -1):
            bit = value >> shift & 1
            if k < nbits:
                if bit:
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
                i += 1
                if i == j:
                    i, j = 0, j + 1
            elif bit:
                raise Graph6Error("nonzero padding bits")
            k += 1
    return Graph(n, adj)


# --- edge lists ------------------------------------------------------------


def write_edge_list(g: Graph) -> str:
    lines = [f"{g.order} {g.size}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def _edge_list_from_lines(lines: list[str]) -> Graph:
    if not lines:
        raise EdgeListError("missing 'n m' header")
    head = lines[0].split()
    if len(head) != 2:
        raise EdgeListError(f"bad header {lines[0]!r}")
    n, m = int(head[0]), int(head[1])
    body = lines[1:]
    if len(body) != m:
        raise EdgeListError(f"header promises {m} edges, found {len(body)}")
    edges = []
    for line in body:
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListError(f"bad edge line {line!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return Graph.from_edges(n, edges)


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"`` (0-based).

    Loops, repeated edges and out-of-range endpoints raise the matching
    :class:`~forestcut.graph.GraphInputError` subclass.
    """
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    return _edge_list_from_lines(lines)


# --- catalogs --------------------------------------------------------------


@dataclass(frozen=True)
class CatalogEntry:
    index: int
    graph: Graph
    source_line: int  # byte offset of the record's first line


@dataclass
class Diagnostic:
    index: int
    offset: int
    message: str


@dataclass
class CatalogStream:
    """Iterable of :class:`CatalogEntry`; malformed records land in ``diagnostics``
    under the ``skip`` policy and raise :class:`CatalogError` under ``abort``."""

    source: Union[str, Path, BinaryIO]
    format: str = GRAPH6
    on_error: str = "abort"
    max_order: int = DEFAULT_MAX_ORDER
    diagnostics: list[Diagnostic] = field(default_factory=list)

    def __post_init__(self):
        if self.format not in (GRAPH6, EDGE_LIST_MULTI):
            raise ValueError(f"unknown catalog format {self.format!r}")
        if self.on_error not in ("abort", "skip"):
            raise ValueError("on_error must be 'abort' or 'skip'")

    def _lines(self) -> Iterator[tuple[int, bytes]]:
        src = self.source
        if isinstance(src, (str, Path)) and str(src) == "-":
            src = sys.stdin.buffer
        if isinstance(src, (str, Path)):
            with open(src, "rb") as fh:
                yield from self._offsets(fh)
        else:
            yield from self._offsets(src)

    @staticmethod
    def _offsets(fh) -> Iterator[tuple[int, bytes]]:
        offset = 0
        for raw in fh:
            if isinstance(raw, str):
                raw = raw.encode("ascii", errors="replace")
            yield offset, raw
            offset += len(raw)

    def _records(self) -> Iterator[tuple[int, object]]:
        """Yield ``(offset, payload)`` per record; payload is bytes or a list of lines."""
        if self.format == GRAPH6:
            for offset, raw in self._lines():
                line = raw.strip()
                if line and line != GRAPH6_HEADER:
                    yield offset, line
            return
        block: list[str] = []
        start = 0
        need = None
        for offset, raw in self._lines():
            line = raw.decode("ascii", errors="replace").strip()
            if not line or line.startswith("#"):
                continue
            if not block:
                start = offset
                parts = line.split()
                need = int(parts[1]) + 1 if len(parts) == 2 and all(p.isdigit() for p in parts) else 1
            block.append(line)
            if len(block) == need:
                yield start, block
                block = []
        if block:
            yield start, block

    def _decode(self, payload) -> Graph:
        if self.format == GRAPH6:
            return parse_graph6(payload, max_order=self.max_order)
        g = _edge_list_from_lines(payload)
        if g.order > self.max_order:
            raise EdgeListError(f"order {g.order} exceeds configured maximum {self.max_order}")
        return g

    def __iter__(self) -> Iterator[CatalogEntry]:
        for index, (offset, payload) in enumerate(self._records()):
            try:
                g = self._decode(payload)
            except (Graph6Error, EdgeListError, GraphInputError, ValueError) as exc:
                if self.on_error == "abort":
                    raise CatalogError(str(exc), index, offset) from exc
                self.diagnostics.append(Diagnostic(index, offset, str(exc)))
                continue
            yield CatalogEntry(index, g, offset)


def stream_catalog(source, format: str = GRAPH6, on_error: str = "abort",
                   max_order: int = DEFAULT_MAX_ORDER) -> CatalogStream:
    """Lazily decode a catalog file, path, binary stream, or ``"-"`` for stdin."""
    return CatalogStream(source, format, on_error, max_order)


def write_catalog(graphs, fh, format: str = GRAPH6) -> None:
    for g in graphs:
        if format == GRAPH6:
            fh.write(write_graph6(g) + "\n")
        else:
            fh.write(write_edge_list(g) + "\n")
