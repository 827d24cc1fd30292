"""Dense graph representation, family constructors, and graph6 serialization.

Vertices are bare indices ``0..order-1``.  Adjacency is held as packed
bitmask rows (Python integers, so common-neighbor counts are single
popcounts) with a lazily built numpy matrix for linear algebra.  Graphs are
immutable once constructed; every operation here is a pure function.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

#: Dense storage is the contract; refuse anything that would not fit it.
MAX_ORDER = 20000


def _bits(mask: int):
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Immutable simple undirected graph on vertices ``0..order-1``.

    ``rows[x]`` is the neighborhood of ``x`` as a bitmask.  The constructor
    verifies simplicity: the adjacency relation must be symmetric with an
    empty diagonal.
    """

    __slots__ = ("_order", "_rows", "_bool", "_hash")

    def __init__(self, order: int, rows: Sequence[int]):
        if not 1 <= order <= MAX_ORDER:
            raise ValueError(f"order must be in 1..{MAX_ORDER}, got {order}")
        rows = tuple(rows)
        if len(rows) != order:
            raise ValueError(f"expected {order} adjacency rows, got {len(rows)}")
        for x, row in enumerate(rows):
            if row < 0 or row >> order:
                raise ValueError(f"row {x} has bits outside 0..{order - 1}")
            if (row >> x) & 1:
                raise ValueError(f"loop at vertex {x}")
        self._order = order
        self._rows = rows
        self._bool = None
        self._hash = None
        mat = self._bool_matrix()
        if not np.array_equal(mat, mat.T):
            raise ValueError("adjacency is not symmetric")

    # -- construction helpers ------------------------------------------------

    @classmethod
    def from_numpy(cls, mat: np.ndarray) -> "Graph":
        """Build a graph from a square 0/1 (or boolean) matrix."""
        mat = np.asarray(mat)
        if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
            raise ValueError("adjacency matrix must be square")
        if mat.dtype != bool:
            vals = np.unique(mat)
            if not np.isin(vals, (0, 1)).all():
                raise ValueError("adjacency entries must be 0 or 1")
            mat = mat.astype(bool)
        order = mat.shape[0]
        packed = np.packbits(mat, axis=1, bitorder="little")
        rows = [int.from_bytes(packed[i].tobytes(), "little") for i in range(order)]
        return cls(order, rows)

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph on ``order`` vertices from an (x, y) edge list."""
        rows = [0] * order
        for x, y in edges:
            if x == y:
                raise ValueError(f"loop at vertex {x}")
            if not (0 <= x < order and 0 <= y < order):
                raise ValueError(f"edge ({x}, {y}) out of range")
            rows[x] |= 1 << y
            rows[y] |= 1 << x
        return cls(order, rows)

    # -- basic queries -------------------------------------------------------

    @property
    def order(self) -> int:
        return self._order

    @property
    def rows(self) -> tuple[int, ...]:
        return self._rows

    def neighbor_mask(self, x: int) -> int:
        return self._rows[x]

    def neighbors(self, x: int) -> tuple[int, ...]:
        return tuple(_bits(self._rows[x]))

    def degree(self, x: int) -> int:
        return self._rows[x].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self._rows)

    def has_edge(self, x: int, y: int) -> bool:
        return bool((self._rows[x] >> y) & 1)

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self._rows) // 2

    def is_regular(self) -> int | None:
        """Return the common valency, or None if degrees differ."""
        degs = self.degrees()
        return degs[0] if all(d == degs[0] for d in degs) else None

    def is_connected(self) -> bool:
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            for x in _bits(frontier):
                nxt |= self._rows[x]
            frontier = nxt & ~seen
            seen |= frontier
        return seen.bit_count() == self._order

    def _bool_matrix(self) -> np.ndarray:
        if self._bool is None:
            nbytes = (self._order + 7) // 8
            buf = b"".join(row.to_bytes(nbytes, "little") for row in self._rows)
            packed = np.frombuffer(buf, dtype=np.uint8).reshape(self._order, nbytes)
            mat = np.unpackbits(packed, axis=1, bitorder="little")[:, : self._order]
            mat = mat.astype(bool)
            mat.flags.writeable = False
            self._bool = mat
        return self._bool

    def to_numpy(self, dtype=np.int64) -> np.ndarray:
        """Adjacency matrix as a fresh numpy array of the given dtype."""
        return self._bool_matrix().astype(dtype)

    # -- equality is by adjacency only ---------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self._order == other._order
            and self._rows == other._rows
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._order, self._rows))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(order={self._order}, edges={self.edge_count()})"


@dataclass(frozen=True)
class ExtensionParams:
    """Parameters (s, n) of an s-clique extension of a triangular graph.

    The valency ``k`` and the nonadjacent common-neighbor count ``mu`` are
    derived, never stored, so they cannot drift out of sync.
    """

    s: int
    n: int

    def __post_init__(self):
        if self.s < 1:
            raise ValueError(f"s must be >= 1, got {self.s}")
        if self.n < 2:
            raise ValueError(f"n must be >= 2, got {self.n}")

    @property
    def k(self) -> int:
        return self.s * (2 * self.n - 3) - 1

    @property
    def mu(self) -> int:
        return 4 * self.s

    def to_json(self) -> dict:
        return {"s": self.s, "n": self.n, "k": self.k, "mu": self.mu}


# -- family constructors -----------------------------------------------------


def make_complete(t: int) -> Graph:
    """Complete graph on t vertices."""
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    full = (1 << t) - 1
    return Graph(t, [full ^ (1 << x) for x in range(t)])


def _subset_graph(labels: list[tuple[int, ...]], ground: int, meet: int) -> Graph:
    # adjacency iff the two subsets intersect in exactly `meet` elements
    onehot = np.zeros((len(labels), ground), dtype=np.int64)
    for i, lab in enumerate(labels):
        onehot[i, list(lab)] = 1
    common = onehot @ onehot.T
    mat = common == meet
    np.fill_diagonal(mat, False)
    return Graph.from_numpy(mat)


def make_johnson(t: int, d: int) -> Graph:
    """Johnson graph J(t, d): d-subsets of a t-set, adjacent when the
    intersection has d-1 elements."""
    if d < 1 or t < 2 * d:
        raise ValueError(f"need t >= 2d >= 2, got t={t}, d={d}")
    return _subset_graph(list(johnson_labels(t, d)), t, d - 1)


def johnson_labels(t: int, d: int) -> tuple[tuple[int, ...], ...]:
    """Vertex labels of J(t, d), in the order used by make_johnson."""
    return tuple(combinations(range(t), d))


def make_triangular(n: int) -> Graph:
    """Triangular graph T(n): the line graph of the complete graph K_n."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    return _subset_graph(list(triangular_labels(n)), n, 1)


def triangular_labels(n: int) -> tuple[tuple[int, int], ...]:
    """Vertex labels of T(n): the 2-subsets of 0..n-1 in lexicographic order."""
    return tuple(combinations(range(n), 2))


def make_grid(p: int, q: int) -> Graph:
    """Rook's graph on a p x q board: cells adjacent iff same row or column."""
    if p < 1 or q < 1:
        raise ValueError(f"need p, q >= 1, got p={p}, q={q}")
    order = p * q
    rows = [0] * order
    for i in range(p):
        for j in range(q):
            v = i * q + j
            for jj in range(q):
                if jj != j:
                    rows[v] |= 1 << (i * q + jj)
            for ii in range(p):
                if ii != i:
                    rows[v] |= 1 << (ii * q + j)
    return Graph(order, rows)


def grid_labels(p: int, q: int) -> tuple[tuple[int, int], ...]:
    """Vertex labels (row, column) of the p x q rook's graph."""
    return tuple((i, j) for i in range(p) for j in range(q))


def clique_extension(g: Graph, s: int) -> Graph:
    """Replace each vertex of g by an s-clique; copies of x and y are
    adjacent iff x = y (distinct copies) or x ~ y.

    Vertex ordering is blocked: copies (x, 0..s-1) of vertex x occupy
    indices x*s..x*s+s-1, so the adjacency matrix is the Kronecker product
    of (A + I) with the all-ones s x s block, minus the identity.
    """
    if s < 1:
        raise ValueError(f"s must be >= 1, got {s}")
    if g.order * s > MAX_ORDER:
        raise ValueError(f"extension order {g.order * s} exceeds {MAX_ORDER}")
    closed = g.to_numpy(np.uint8)
    np.fill_diagonal(closed, 1)
    mat = np.kron(closed, np.ones((s, s), dtype=np.uint8))
    np.fill_diagonal(mat, 0)
    return Graph.from_numpy(mat)


def extension_labels(base_order: int, s: int) -> tuple[tuple[int, int], ...]:
    """Labels (base vertex, copy index) matching clique_extension's ordering."""
    return tuple((x, i) for x in range(base_order) for i in range(s))


def complement(g: Graph) -> Graph:
    """Complement graph: adjacency negated off the diagonal."""
    full = (1 << g.order) - 1
    return Graph(g.order, [full & ~row & ~(1 << x) for x, row in enumerate(g.rows)])


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Graph:
    """Subgraph induced on ``vertices``; new vertex i is ``vertices[i]``."""
    vs = list(vertices)
    if len(set(vs)) != len(vs):
        raise ValueError("duplicate vertices")
    if not vs:
        raise ValueError("induced subgraph needs at least one vertex")
    for v in vs:
        if not 0 <= v < g.order:
            raise IndexError(f"vertex {v} out of range")
    mat = g._bool_matrix()[np.ix_(vs, vs)]
    return Graph.from_numpy(mat)


def local_graph(g: Graph, x: int) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced on the neighborhood of x, plus the index map back
    into g (local vertex i corresponds to the returned map's i-th entry)."""
    if not 0 <= x < g.order:
        raise IndexError(f"vertex {x} out of range")
    nbrs = g.neighbors(x)
    if not nbrs:
        raise ValueError(f"vertex {x} is isolated; its local graph is empty")
    return induced_subgraph(g, nbrs), nbrs


# -- graph6 ------------------------------------------------------------------
#
# Standard graph6: a size field (one byte 63+n for n <= 62, else 126 followed
# by three bytes holding n in 18 bits), then the upper triangle x(i,j) for
# j = 1..n-1, i = 0..j-1, packed into 6-bit groups MSB first, each byte
# offset by 63.


def encode_graph6(g: Graph) -> bytes:
    """Encode to the standard graph6 byte string."""
    n = g.order
    if n <= 62:
        header = bytes([63 + n])
    elif n <= 258047:
        header = bytes(
            [126, 63 + ((n >> 12) & 63), 63 + ((n >> 6) & 63), 63 + (n & 63)]
        )
    else:  # unreachable while MAX_ORDER <= 258047; kept as a guard
        raise ValueError(f"order {n} too large for the 4-byte size field")
    if n == 1:
        return header
    mat = g._bool_matrix()
    bits = np.concatenate([mat[:j, j] for j in range(1, n)])
    pad = (-len(bits)) % 6
    if pad:
        bits = np.concatenate([bits, np.zeros(pad, dtype=bool)])
    groups = bits.reshape(-1, 6).astype(np.uint8)
    weights = np.array([32, 16, 8, 4, 2, 1], dtype=np.uint8)
    body = (groups @ weights) + 63
    return header + body.astype(np.uint8).tobytes()


def decode_graph6(data: bytes | str) -> Graph:
    """Decode a graph6 byte string (optionally carrying the >>graph6<< header)."""
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if data.startswith(b">>graph6<<"):
        data = data[len(b">>graph6<<") :]
    if not data:
        raise ValueError("empty graph6 input")
    if any(b < 63 or b > 126 for b in data):
        raise ValueError("graph6 byte outside the printable range 63..126")
    if data[0] == 126:
        if len(data) >= 2 and data[1] == 126:
            raise ValueError("8-byte graph6 size field exceeds the supported order")
        if len(data) < 4:
            raise ValueError("truncated graph6 size field")
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        body = data[4:]
    else:
        n = data[0] - 63
        body = data[1:]
    if n < 1:
        raise ValueError("graph6 order must be at least 1")
    if n > MAX_ORDER:
        raise ValueError(f"graph6 order {n} exceeds {MAX_ORDER}")
    nbits = n * (n - 1) // 2
    expect = (nbits + 5) // 6
    if len(body) != expect:
        raise ValueError(f"graph6 body has {len(body)} bytes, expected {expect}")
    if nbits == 0:
        return Graph(n, [0] * n)
    vals = np.frombuffer(body, dtype=np.uint8) - 63
    groups = np.column_stack([(vals >> shift) & 1 for shift in (5, 4, 3, 2, 1, 0)])
    bits = groups.reshape(-1)
    if bits[nbits:].any():
        raise ValueError("nonzero padding bits in graph6 body")
    bits = bits[:nbits]
    mat = np.zeros((n, n), dtype=bool)
    pos = 0
    for j in range(1, n):
        mat[:j, j] = bits[pos : pos + j]
        pos += j
    mat |= mat.T
    return Graph.from_numpy(mat)
