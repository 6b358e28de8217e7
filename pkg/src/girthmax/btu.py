"""Balanced Tanner units (BTUs) and their matrix / bipartite-graph views.

An (m, r) BTU is an m x m 0/1 matrix with exactly r ones in every row
and column, stored as its decomposition into r pairwise-disjoint
permutation matrices ("compatible" permutations: no two agree at any
position). The equivalent bipartite graph has m left (row) vertices and
m right (column) vertices, left i adjacent to right p[i] for each
constituent p; it is r-regular with no parallel edges.

Constituent order is significant: two BTUs are equal only if their
permutation sequences match. Use `same_matrix` for the order-insensitive
comparison of the underlying matrices.

Serialization: the alist format standard in LDPC tooling (column-major
index lists, see `write_alist`), DIMACS edge format (left vertices
1..m, right m+1..2m), and a dense 0/1 text grid for debugging.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .perm import Permutation, compose, identity, inverse

__all__ = [
    "Btu",
    "BipartiteGraph",
    "BinaryMatrix",
    "IncompatiblePermutations",
    "MalformedAlist",
    "MalformedDimacs",
    "NotRegular",
    "DecompositionFailed",
    "same_matrix",
    "btu_from_matrix",
    "write_alist",
    "read_alist",
    "write_dimacs",
    "read_dimacs",
    "write_dense",
    "read_dense",
]


class IncompatiblePermutations(ValueError):
    """Two constituents place a one in the same matrix position."""

    def __init__(self, position: int, first: int, second: int):
        self.position = position
        self.first = first
        self.second = second
        super().__init__(
            f"constituents {first} and {second} collide at position {position}"
        )


class MalformedAlist(ValueError):
    """Structural problem in an alist file; carries the 1-based line number."""

    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


class MalformedDimacs(ValueError):
    pass


class NotRegular(ValueError):
    """Parsed degrees differ from the degrees the file declares."""


class DecompositionFailed(ValueError):
    """Matrix is not a disjoint union of permutation matrices."""


class BipartiteGraph:
    """Adjacency view: for each left vertex, the sorted right neighbors.

    Vertices are addressed per side (left 0..n_left-1, right
    0..n_right-1); the girth module flattens them to a single numbering
    left i -> i, right c -> n_left + c when it reports cycle witnesses.
    """

    __slots__ = ("n_left", "n_right", "adjacency")

    def __init__(self, n_left: int, n_right: int, adjacency: Iterable[Iterable[int]]):
        adj = tuple(tuple(nbrs) for nbrs in adjacency)
        if len(adj) != n_left:
            raise ValueError(f"expected {n_left} adjacency rows, got {len(adj)}")
        for i, nbrs in enumerate(adj):
            if any(not 0 <= c < n_right for c in nbrs):
                raise ValueError(f"left vertex {i}: neighbor out of range")
            if list(nbrs) != sorted(set(nbrs)):
                raise ValueError(f"left vertex {i}: neighbors must be sorted and duplicate-free")
        object.__setattr__(self, "n_left", n_left)
        object.__setattr__(self, "n_right", n_right)
        object.__setattr__(self, "adjacency", adj)

    def __setattr__(self, name, value):
        raise AttributeError("BipartiteGraph is immutable")

    @property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency)

    def __repr__(self) -> str:
        return f"BipartiteGraph(n_left={self.n_left}, n_right={self.n_right}, edges={self.edge_count})"


class BinaryMatrix:
    """A 0/1 matrix as per-row sorted column indices (the alist view)."""

    __slots__ = ("n_rows", "n_cols", "rows")

    def __init__(self, n_rows: int, n_cols: int, rows: Iterable[Iterable[int]]):
        rws = tuple(tuple(sorted(set(r))) for r in rows)
        if len(rws) != n_rows:
            raise ValueError(f"expected {n_rows} rows, got {len(rws)}")
        for i, r in enumerate(rws):
            if any(not 0 <= c < n_cols for c in r):
                raise ValueError(f"row {i}: column index out of range")
        object.__setattr__(self, "n_rows", n_rows)
        object.__setattr__(self, "n_cols", n_cols)
        object.__setattr__(self, "rows", rws)

    def __setattr__(self, name, value):
        raise AttributeError("BinaryMatrix is immutable")

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, BinaryMatrix)
            and self.n_rows == other.n_rows
            and self.n_cols == other.n_cols
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.n_rows, self.n_cols, self.rows))

    def columns(self) -> tuple[tuple[int, ...], ...]:
        """Per-column sorted row indices (the transpose view)."""
        cols: list[list[int]] = [[] for _ in range(self.n_cols)]
        for i, r in enumerate(self.rows):
            for c in r:
                cols[c].append(i)
        return tuple(tuple(col) for col in cols)

    def to_bipartite(self) -> BipartiteGraph:
        return BipartiteGraph(self.n_rows, self.n_cols, self.rows)

    def to_array(self) -> np.ndarray:
        """Dense numpy uint8 view."""
        a = np.zeros((self.n_rows, self.n_cols), dtype=np.uint8)
        for i, r in enumerate(self.rows):
            a[i, list(r)] = 1
        return a

    def __repr__(self) -> str:
        ones = sum(len(r) for r in self.rows)
        return f"BinaryMatrix({self.n_rows}x{self.n_cols}, ones={ones})"


class Btu:
    """r compatible permutations on m points; an (m, r) BTU."""

    __slots__ = ("perms",)

    def __init__(self, perms: Sequence[Permutation]):
        perms = tuple(perms)
        if not perms:
            raise ValueError("a BTU needs at least one constituent permutation")
        m = perms[0].size
        for p in perms:
            if p.size != m:
                raise ValueError(f"size mismatch: {p.size} != {m}")
        r = len(perms)
        if r > m:
            raise ValueError(f"degree r={r} exceeds matrix side m={m}")
        images = [p.image for p in perms]
        for i in range(m):
            seen: dict[int, int] = {}
            for t in range(r):
                v = images[t][i]
                if v in seen:
                    raise IncompatiblePermutations(i, seen[v], t)
                seen[v] = t
        object.__setattr__(self, "perms", perms)

    def __setattr__(self, name, value):
        raise AttributeError("Btu is immutable")

    @classmethod
    def from_permutations(cls, perms: Iterable[Permutation]) -> "Btu":
        return cls(tuple(perms))

    @property
    def m(self) -> int:
        return self.perms[0].size

    @property
    def r(self) -> int:
        return len(self.perms)

    def __eq__(self, other: object) -> bool:
        # order-sensitive; use same_matrix() to compare the matrices
        return isinstance(other, Btu) and self.perms == other.perms

    def __hash__(self) -> int:
        return hash(self.perms)

    def __repr__(self) -> str:
        return f"Btu(m={self.m}, r={self.r})"

    def to_bipartite(self) -> BipartiteGraph:
        m = self.m
        images = [p.image for p in self.perms]
        return BipartiteGraph(m, m, (sorted(img[i] for img in images) for i in range(m)))

    def matrix(self) -> BinaryMatrix:
        m = self.m
        images = [p.image for p in self.perms]
        return BinaryMatrix(m, m, ((img[i] for img in images) for i in range(m)))

    def to_array(self) -> np.ndarray:
        return self.matrix().to_array()

    def relabel(self, row_perm: Permutation, col_perm: Permutation) -> "Btu":
        """Apply a row and a column relabeling; an isomorphism of the graph.

        Each constituent p becomes col_perm ∘ p ∘ row_perm⁻¹, which is the
        matrix with rows permuted by row_perm and columns by col_perm.
        Girth and all pairwise relative cycle types are preserved.
        """
        m = self.m
        if row_perm.size != m or col_perm.size != m:
            raise ValueError(f"relabeling permutations must act on {m} elements")
        row_inv = inverse(row_perm)
        return Btu(tuple(compose(col_perm, compose(p, row_inv)) for p in self.perms))

    def normalize_to_identity(self, t: int) -> "Btu":
        """Relabel rows so that constituent t becomes the identity."""
        if not 0 <= t < self.r:
            raise IndexError(f"constituent index {t} out of range 0..{self.r - 1}")
        return self.relabel(self.perms[t], identity(self.m))


def same_matrix(a: Btu, b: Btu) -> bool:
    """Order-insensitive comparison of the underlying 0/1 matrices."""
    return a.matrix() == b.matrix()


def _as_matrix(x: "Btu | BinaryMatrix") -> BinaryMatrix:
    return x.matrix() if isinstance(x, Btu) else x


# ---------------------------------------------------------------------------
# alist
# ---------------------------------------------------------------------------

def write_alist(x: "Btu | BinaryMatrix") -> str:
    """Render the matrix in alist format.

    Layout (1-based indices, single spaces, newline-terminated lines):

        n_cols n_rows
        max_col_degree max_row_degree
        <n_cols column degrees>
        <n_rows row degrees>
        <n_cols lines: ascending row indices of each column>
        <n_rows lines: ascending column indices of each row>

    Regular matrices are written without the zero padding some alist
    writers emit for irregular codes.
    """
    mat = _as_matrix(x)
    cols = mat.columns()
    lines = [
        f"{mat.n_cols} {mat.n_rows}",
        f"{max((len(c) for c in cols), default=0)} {max((len(r) for r in mat.rows), default=0)}",
        " ".join(str(len(c)) for c in cols),
        " ".join(str(len(r)) for r in mat.rows),
    ]
    lines.extend(" ".join(str(i + 1) for i in col) for col in cols)
    lines.extend(" ".join(str(c + 1) for c in row) for row in mat.rows)
    return "\n".join(lines) + "\n"


def _int_fields(line: str, lineno: int) -> list[int]:
    out = []
    for tok in line.split():
        try:
            out.append(int(tok))
        except ValueError:
            raise MalformedAlist(lineno, f"non-integer field {tok!r}") from None
    return out


def read_alist(text: str) -> BinaryMatrix:
    """Parse alist text into a BinaryMatrix.

    Tolerates the zero padding used for irregular codes (zeros in index
    lists are ignored). Raises MalformedAlist for structural problems,
    NotRegular when an index list disagrees with its declared degree.
    """
    lines = text.splitlines()
    if len(lines) < 4:
        raise MalformedAlist(len(lines) + 1, "truncated header")
    header = _int_fields(lines[0], 1)
    if len(header) != 2 or header[0] < 1 or header[1] < 1:
        raise MalformedAlist(1, f"expected 'n_cols n_rows', got {lines[0]!r}")
    n_cols, n_rows = header
    maxima = _int_fields(lines[1], 2)
    if len(maxima) != 2:
        raise MalformedAlist(2, f"expected 'max_col_degree max_row_degree', got {lines[1]!r}")
    max_col, max_row = maxima
    col_degrees = _int_fields(lines[2], 3)
    if len(col_degrees) != n_cols:
        raise MalformedAlist(3, f"expected {n_cols} column degrees, got {len(col_degrees)}")
    row_degrees = _int_fields(lines[3], 4)
    if len(row_degrees) != n_rows:
        raise MalformedAlist(4, f"expected {n_rows} row degrees, got {len(row_degrees)}")
    if len(lines) < 4 + n_cols + n_rows:
        raise MalformedAlist(len(lines) + 1, f"truncated: expected {4 + n_cols + n_rows} lines")

    def index_list(lineno: int, bound: int, declared: int, what: str) -> list[int]:
        entries = [v for v in _int_fields(lines[lineno - 1], lineno) if v != 0]
        for v in entries:
            if not 1 <= v <= bound:
                raise MalformedAlist(lineno, f"{what} index {v} outside 1..{bound}")
        if len(set(entries)) != len(entries):
            raise MalformedAlist(lineno, f"duplicate {what} index")
        if len(entries) != declared:
            raise NotRegular(
                f"line {lineno}: {what} list has {len(entries)} entries, degree declares {declared}"
            )
        return [v - 1 for v in entries]

    col_lists = [
        index_list(5 + c, n_rows, col_degrees[c], "row") for c in range(n_cols)
    ]
    row_lists = [
        index_list(5 + n_cols + i, n_cols, row_degrees[i], "column") for i in range(n_rows)
    ]
    if max(col_degrees, default=0) != max_col or max(row_degrees, default=0) != max_row:
        raise NotRegular(
            f"declared maxima {max_col}/{max_row} differ from actual "
            f"{max(col_degrees, default=0)}/{max(row_degrees, default=0)}"
        )
    from_cols = sorted((i, c) for c, col in enumerate(col_lists) for i in col)
    from_rows = sorted((i, c) for i, row in enumerate(row_lists) for c in row)
    if from_cols != from_rows:
        raise MalformedAlist(5, "column lists and row lists describe different matrices")
    return BinaryMatrix(n_rows, n_cols, row_lists)


def btu_from_matrix(mat: BinaryMatrix) -> Btu:
    """Recover a permutation decomposition of a regular square matrix.

    Peels off perfect matchings greedily (augmenting-path matching, rows
    in ascending order), so any r-regular square matrix decomposes; the
    constituent order is the greedy extraction order, which need not be
    the order some original BTU was built with. Raises
    DecompositionFailed for non-square or irregular matrices.
    """
    m = mat.n_rows
    if mat.n_cols != m:
        raise DecompositionFailed(f"matrix is {mat.n_rows}x{mat.n_cols}, not square")
    degrees = {len(r) for r in mat.rows}
    col_degrees = {len(c) for c in mat.columns()}
    if len(degrees) != 1 or degrees != col_degrees:
        raise DecompositionFailed("matrix is not regular")
    r = degrees.pop()
    remaining = [list(row) for row in mat.rows]
    perms = []
    for _ in range(r):
        match_of_col = [-1] * m  # col -> row

        def try_assign(row: int, banned: set[int]) -> bool:
            for c in remaining[row]:
                if c in banned:
                    continue
                banned.add(c)
                if match_of_col[c] == -1 or try_assign(match_of_col[c], banned):
                    match_of_col[c] = row
                    return True
            return False

        for row in range(m):
            if not try_assign(row, set()):
                raise DecompositionFailed(f"no perfect matching found at extraction {len(perms)}")
        image = [0] * m
        for c, row in enumerate(match_of_col):
            image[row] = c
        perms.append(Permutation(image))
        for row in range(m):
            remaining[row].remove(image[row])
    return Btu(tuple(perms))


# ---------------------------------------------------------------------------
# DIMACS edge format
# ---------------------------------------------------------------------------

def write_dimacs(x: "Btu | BinaryMatrix") -> str:
    """DIMACS edge format of the bipartite graph.

    Left (row) vertices are 1..m, right (column) vertices m+1..2m;
    header is "p edge <vertices> <edges>" and edge lines are sorted.
    """
    mat = _as_matrix(x)
    lines = [f"p edge {mat.n_rows + mat.n_cols} {sum(len(r) for r in mat.rows)}"]
    for i, row in enumerate(mat.rows):
        for c in row:
            lines.append(f"e {i + 1} {mat.n_rows + c + 1}")
    return "\n".join(lines) + "\n"


def read_dimacs(text: str) -> BinaryMatrix:
    """Parse DIMACS edge text written by write_dimacs back into a matrix.

    Expects the bipartite convention above: an even vertex count 2m with
    every edge joining 1..m to m+1..2m.
    """
    n_vertices = None
    edges = []
    declared_edges = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if len(fields) != 4 or fields[1] != "edge":
                raise MalformedDimacs(f"line {lineno}: bad problem line {raw!r}")
            n_vertices, declared_edges = int(fields[2]), int(fields[3])
        elif fields[0] == "e":
            if len(fields) != 3:
                raise MalformedDimacs(f"line {lineno}: bad edge line {raw!r}")
            edges.append((int(fields[1]), int(fields[2])))
        else:
            raise MalformedDimacs(f"line {lineno}: unknown record {fields[0]!r}")
    if n_vertices is None:
        raise MalformedDimacs("missing problem line")
    if n_vertices % 2 != 0:
        raise MalformedDimacs(f"vertex count {n_vertices} is odd; expected a 2m bipartite layout")
    if len(edges) != declared_edges:
        raise MalformedDimacs(f"declared {declared_edges} edges, found {len(edges)}")
    m = n_vertices // 2
    rows: list[list[int]] = [[] for _ in range(m)]
    for u, v in edges:
        if u > v:
            u, v = v, u
        if not (1 <= u <= m < v <= 2 * m):
            raise MalformedDimacs(f"edge ({u}, {v}) does not join left 1..{m} to right {m + 1}..{2 * m}")
        rows[u - 1].append(v - m - 1)
    return BinaryMatrix(m, m, rows)


# ---------------------------------------------------------------------------
# dense 0/1 text
# ---------------------------------------------------------------------------

def write_dense(x: "Btu | BinaryMatrix") -> str:
    """Debug view: one line of '0'/'1' characters per matrix row."""
    mat = _as_matrix(x)
    a = mat.to_array()
    return "\n".join("".join("1" if v else "0" for v in row) for row in a) + "\n"


def read_dense(text: str) -> BinaryMatrix:
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise ValueError("empty dense matrix")
    width = len(lines[0])
    rows = []
    for lineno, line in enumerate(lines, start=1):
        if len(line) != width:
            raise ValueError(f"line {lineno}: ragged row ({len(line)} != {width})")
        if set(line) - {"0", "1"}:
            raise ValueError(f"line {lineno}: characters other than 0/1")
        rows.append([c for c, ch in enumerate(line) if ch == "1"])
    return BinaryMatrix(len(lines), width, rows)
