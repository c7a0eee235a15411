"""Combinatorial surface complexes, their CSS codes and exact distances.

A closed surface is described by a cell complex: vertices, edges with two
endpoint slots (loops allowed), faces listing boundary edges with
multiplicity.  Each edge must be used exactly twice by faces.  Qubits live
on edges; X checks are vertex stars, Z checks are face boundaries, both
over GF(2), so an edge looping at a vertex or doubled in a face drops out
of the corresponding check.

Distances are computed exactly, either by enumerating the full kernel of a
check matrix (small codes) or by a breadth-first systole search on the
primal and dual graphs (shortest homologically nontrivial cycle through
each root, tested against the opposing logical operators).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from .geometry import EdgePairing, opposite_edge_pairing, vertex_cycles


class HomologyError(ValueError):
    """A homology-level precondition failed."""


class NotClosedSurface(HomologyError):
    """Some edge is not shared by exactly two face slots."""


class NoLogicals(HomologyError):
    """The code encodes nothing; distances are undefined."""


@dataclass(frozen=True)
class SurfaceComplex:
    """Cell complex of a closed surface; all ids are 0-based."""

    n_vertices: int
    n_edges: int
    n_faces: int
    edge_endpoints: tuple[tuple[int, int], ...]
    face_boundaries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.edge_endpoints) != self.n_edges:
            raise ValueError("endpoint list does not match edge count")
        if len(self.face_boundaries) != self.n_faces:
            raise ValueError("boundary list does not match face count")
        for u, v in self.edge_endpoints:
            if not (0 <= u < self.n_vertices and 0 <= v < self.n_vertices):
                raise ValueError(f"edge endpoint out of range: ({u},{v})")
        for b in self.face_boundaries:
            for e in b:
                if not 0 <= e < self.n_edges:
                    raise ValueError(f"face boundary edge out of range: {e}")

    @property
    def euler_characteristic(self) -> int:
        return self.n_vertices - self.n_edges + self.n_faces

    def edge_face_uses(self) -> list[int]:
        """How many face boundary slots each edge occupies."""
        uses = [0] * self.n_edges
        for b in self.face_boundaries:
            for e in b:
                uses[e] += 1
        return uses

    def vertex_degrees(self) -> list[int]:
        """Endpoint slots per vertex; a loop counts twice."""
        deg = [0] * self.n_vertices
        for u, v in self.edge_endpoints:
            deg[u] += 1
            deg[v] += 1
        return deg


def verify_regularity(cx: SurfaceComplex, p: int, q: int) -> bool:
    """True when every face has p sides and every vertex degree q."""
    if any(len(b) != p for b in cx.face_boundaries):
        return False
    return all(d == q for d in cx.vertex_degrees())


# ---------------------------------------------------------------- builders

def build_toric(l: int) -> SurfaceComplex:
    """l x l square lattice on the torus: V = l^2, E = 2 l^2, F = l^2."""
    if l < 2:
        raise ValueError(f"need l >= 2, got {l}")
    vid = lambda i, j: (i % l) * l + (j % l)
    hid = lambda i, j: (i % l) * l + (j % l)            # (i,j) -> (i,j+1)
    wid = lambda i, j: l * l + (i % l) * l + (j % l)    # (i,j) -> (i+1,j)
    endpoints = []
    for i in range(l):
        for j in range(l):
            endpoints.append((vid(i, j), vid(i, j + 1)))
    for i in range(l):
        for j in range(l):
            endpoints.append((vid(i, j), vid(i + 1, j)))
    faces = []
    for i in range(l):
        for j in range(l):
            faces.append((hid(i, j), wid(i, j + 1), hid(i + 1, j), wid(i, j)))
    return SurfaceComplex(l * l, 2 * l * l, l * l, tuple(endpoints), tuple(faces))


class _UnionFind:
    def __init__(self, n: int) -> None:
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def _grid_quotient(l: int, flip_x: bool, flip_y: bool) -> SurfaceComplex:
    """Quotient of an (l+1) x (l+1) vertex grid by boundary identifications.

    The right column glues to the left (reversed when flip_x), the top row
    to the bottom (reversed when flip_y).  Straight/straight would be the
    torus; one flip is the Klein bottle, two flips the projective plane.
    """
    if l < 2:
        raise ValueError(f"need l >= 2, got {l}")
    m = l + 1
    vid = lambda x, y: x * m + y
    # edge ids: horizontal (x,y)-(x+1,y) then vertical (x,y)-(x,y+1)
    hid = lambda x, y: x * m + y
    wid = lambda x, y: l * m + x * l + y

    vuf = _UnionFind(m * m)
    for y in range(m):
        vuf.union(vid(l, y), vid(0, l - y) if flip_x else vid(0, y))
    for x in range(m):
        vuf.union(vid(x, l), vid(l - x, 0) if flip_y else vid(x, 0))

    euf = _UnionFind(l * m + m * l)
    for y in range(l):
        # right column of vertical edges onto the left column
        euf.union(wid(l, y), wid(0, l - 1 - y) if flip_x else wid(0, y))
    for x in range(l):
        euf.union(hid(x, l), hid(l - 1 - x, 0) if flip_y else hid(x, 0))

    vroots = sorted({vuf.find(i) for i in range(m * m)})
    vmap = {r: i for i, r in enumerate(vroots)}
    eroots = sorted({euf.find(i) for i in range(l * m + m * l)})
    emap = {r: i for i, r in enumerate(eroots)}

    endpoints: list[Optional[tuple[int, int]]] = [None] * len(eroots)
    for x in range(l):
        for y in range(m):
            e = emap[euf.find(hid(x, y))]
            endpoints[e] = (vmap[vuf.find(vid(x, y))], vmap[vuf.find(vid(x + 1, y))])
    for x in range(m):
        for y in range(l):
            e = emap[euf.find(wid(x, y))]
            endpoints[e] = (vmap[vuf.find(vid(x, y))], vmap[vuf.find(vid(x, y + 1))])

    faces = []
    for x in range(l):
        for y in range(l):
            faces.append(tuple(emap[euf.find(e)] for e in
                               (hid(x, y), wid(x + 1, y), hid(x, y + 1), wid(x, y))))
    return SurfaceComplex(len(vroots), len(eroots), l * l, tuple(endpoints), tuple(faces))


def build_klein_bottle(l: int) -> SurfaceComplex:
    """l x l lattice on the Klein bottle (one orientation-reversing gluing)."""
    return _grid_quotient(l, flip_x=True, flip_y=False)


def build_projective_plane(l: int) -> SurfaceComplex:
    """l x l lattice on the projective plane (antipodal boundary gluing)."""
    return _grid_quotient(l, flip_x=True, flip_y=True)


def complex_from_pairing(pairing: EdgePairing) -> SurfaceComplex:
    """Quotient of a polygon by an edge pairing: one face, N/2 edges.

    Paired sides of the N-gon become one edge class each, numbered by the
    smaller side of the pair; vertices are the corner cycles of the pairing.
    """
    n = pairing.n_edges
    cycles = vertex_cycles(pairing)
    corner_class = {c: i for i, cyc in enumerate(cycles) for c in cyc}
    pairs = sorted(tuple(sorted(pair)) for pair in pairing.pairs)
    side_class = {side: cls for cls, pair in enumerate(pairs) for side in pair}
    endpoints = []
    for rep, _mate in pairs:
        endpoints.append((corner_class[rep], corner_class[rep % n + 1]))
    boundary = tuple(side_class[j] for j in range(1, n + 1))
    return SurfaceComplex(len(cycles), n // 2, 1, tuple(endpoints), (boundary,))


def build_polygon_code(n_edges: int, orientable: bool = True) -> SurfaceComplex:
    """Fundamental-polygon code: opposite sides of an N-gon identified."""
    return complex_from_pairing(opposite_edge_pairing(n_edges, orientable))


# ------------------------------------------------------------ GF(2) algebra

def gf2_row_reduce(m: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over GF(2); returns (nonzero rows, pivot cols)."""
    a = (np.array(m, dtype=np.uint8) % 2).reshape(len(m), -1) if len(m) else np.zeros((0, 0), np.uint8)
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        hit = np.nonzero(a[r:, c])[0]
        if hit.size == 0:
            continue
        pr = r + hit[0]
        if pr != r:
            a[[r, pr]] = a[[pr, r]]
        mask = a[:, c].astype(bool)
        mask[r] = False
        a[mask] ^= a[r]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return a[:r], pivots


def gf2_rank(m: np.ndarray) -> int:
    return len(gf2_row_reduce(m)[1])


def gf2_nullspace(m: np.ndarray) -> np.ndarray:
    """Basis of the right kernel, one row per basis vector."""
    m = np.atleast_2d(np.array(m, dtype=np.uint8))
    cols = m.shape[1]
    rref, pivots = gf2_row_reduce(m)
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = np.zeros((len(free), cols), dtype=np.uint8)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for row, pc in zip(rref, pivots):
            basis[i, pc] = row[f]
    return basis


class _Span:
    """Incremental GF(2) span with membership testing."""

    def __init__(self, rows: Optional[np.ndarray] = None) -> None:
        self.by_pivot: dict[int, np.ndarray] = {}
        if rows is not None:
            for v in rows:
                self.add(v)

    def reduce(self, v: np.ndarray) -> np.ndarray:
        v = v.copy()
        while True:
            nz = np.nonzero(v)[0]
            if nz.size == 0 or nz[0] not in self.by_pivot:
                return v
            v ^= self.by_pivot[nz[0]]

    def add(self, v: np.ndarray) -> bool:
        """Insert v; False when it was already in the span."""
        res = self.reduce(v)
        nz = np.nonzero(res)[0]
        if nz.size == 0:
            return False
        self.by_pivot[nz[0]] = res
        return True


# ------------------------------------------------------------------ codes

@dataclass(frozen=True)
class CssCode:
    """CSS pair: h_x rows are X checks, h_z rows are Z checks (mod 2)."""

    h_x: np.ndarray
    h_z: np.ndarray

    @property
    def n(self) -> int:
        return self.h_x.shape[1]

    @property
    def k(self) -> int:
        return logical_count(self)


def css_from_complex(cx: SurfaceComplex) -> CssCode:
    """Vertex and face check matrices of a closed surface complex."""
    bad = [e for e, c in enumerate(cx.edge_face_uses()) if c != 2]
    if bad:
        raise NotClosedSurface(f"edges not used exactly twice by faces: {bad}")
    h_x = np.zeros((cx.n_vertices, cx.n_edges), dtype=np.uint8)
    for e, (u, v) in enumerate(cx.edge_endpoints):
        h_x[u, e] ^= 1
        h_x[v, e] ^= 1
    h_z = np.zeros((cx.n_faces, cx.n_edges), dtype=np.uint8)
    for f, b in enumerate(cx.face_boundaries):
        for e in b:
            h_z[f, e] ^= 1
    if np.any((h_x.astype(np.int64) @ h_z.T.astype(np.int64)) % 2):
        raise NotClosedSurface("vertex and face checks do not commute")
    return CssCode(h_x, h_z)


def logical_count(code: CssCode) -> int:
    return code.n - gf2_rank(code.h_x) - gf2_rank(code.h_z)


def _logical_basis(kernel_of: np.ndarray, modulo: np.ndarray) -> np.ndarray:
    """Representatives spanning ker(kernel_of) / rowspace(modulo)."""
    span = _Span(gf2_row_reduce(modulo)[0])
    out = []
    for v in gf2_nullspace(kernel_of):
        if span.add(v):
            out.append(v)
    n = kernel_of.shape[1]
    return np.array(out, dtype=np.uint8).reshape(len(out), n)


def logical_operators(code: CssCode) -> tuple[np.ndarray, np.ndarray]:
    """(X logicals, Z logicals), one representative per generator."""
    lx = _logical_basis(code.h_z, code.h_x)
    lz = _logical_basis(code.h_x, code.h_z)
    return lx, lz


class Distances(NamedTuple):
    d_x: int
    d_z: int
    method: str


_BLOCK_BITS = 16


def _min_coset_weight(kernel_basis: np.ndarray, detector: np.ndarray) -> int:
    """Minimum weight over the kernel span of vectors the detector sees.

    A vector is a nontrivial logical exactly when it anticommutes with some
    opposing logical, so membership outside the stabilizer never needs an
    explicit coset test.
    """
    m, n = kernel_basis.shape
    if m > 28:
        raise ValueError(f"kernel dimension {m} too large to enumerate")
    basis = kernel_basis.astype(np.int64)
    det = detector.astype(np.int64)
    best = n + 1
    shifts = np.arange(m, dtype=np.int64)
    for start in range(0, 1 << m, 1 << _BLOCK_BITS):
        stop = min(start + (1 << _BLOCK_BITS), 1 << m)
        idx = np.arange(start, stop, dtype=np.int64)
        bits = (idx[:, None] >> shifts[None, :]) & 1
        vecs = (bits @ basis) % 2
        nontrivial = ((vecs @ det.T) % 2).any(axis=1)
        if not nontrivial.any():
            continue
        best = min(best, int(vecs[nontrivial].sum(axis=1).min()))
    return best


def exhaustive_distances(code: CssCode) -> Distances:
    """Exact distances by enumerating both check kernels."""
    lx, lz = logical_operators(code)
    if len(lx) == 0:
        raise NoLogicals("k = 0")
    d_x = _min_coset_weight(gf2_nullspace(code.h_z), lz)
    d_z = _min_coset_weight(gf2_nullspace(code.h_x), lx)
    return Distances(d_x, d_z, "exhaustive")


def _graph_systole(n_nodes: int, n_edges: int,
                   endpoints: list[tuple[int, int]],
                   detector: np.ndarray) -> int:
    """Shortest cycle (as a GF(2) edge set) the detector pairs oddly with.

    Breadth-first search from every root; every edge closes a candidate
    loop from the two root paths, and candidates are tested by parity
    against the opposing logicals.
    """
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n_nodes)]
    for e, (u, v) in enumerate(endpoints):
        adj[u].append((v, e))
        if u != v:
            adj[v].append((u, e))
    det_masks = []
    for row in detector:
        mask = 0
        for i in np.nonzero(row)[0]:
            mask |= 1 << int(i)
        det_masks.append(mask)
    best: Optional[int] = None
    for root in range(n_nodes):
        path = [None] * n_nodes  # GF(2) edge set of the tree path, as a bitmask
        path[root] = 0
        queue = [root]
        while queue:
            nxt = []
            for u in queue:
                for v, e in adj[u]:
                    if path[v] is None:
                        path[v] = path[u] ^ (1 << e)
                        nxt.append(v)
            queue = nxt
        for e, (u, v) in enumerate(endpoints):
            if path[u] is None or path[v] is None:
                continue
            vec = path[u] ^ path[v] ^ (1 << e)
            if vec == 0:
                continue
            if any((vec & m).bit_count() & 1 for m in det_masks):
                w = vec.bit_count()
                if best is None or w < best:
                    best = w
    if best is None:
        raise NoLogicals("no nontrivial cycle found")
    return best


def cycle_distances(cx: SurfaceComplex) -> Distances:
    """Exact distances as homological systoles of the primal and dual graphs.

    Z logicals are nontrivial cycles of the primal graph, X logicals of the
    dual graph (faces as nodes, an edge joining the faces it bounds).
    """
    code = css_from_complex(cx)
    lx, lz = logical_operators(code)
    if len(lx) == 0:
        raise NoLogicals("k = 0")
    face_of: list[list[int]] = [[] for _ in range(cx.n_edges)]
    for f, b in enumerate(cx.face_boundaries):
        for e in b:
            face_of[e].append(f)
    dual_endpoints = [(fs[0], fs[1]) for fs in face_of]
    d_z = _graph_systole(cx.n_vertices, cx.n_edges, list(cx.edge_endpoints), lx)
    d_x = _graph_systole(cx.n_faces, cx.n_edges, dual_endpoints, lz)
    return Distances(d_x, d_z, "cycle")


_EXHAUSTIVE_MAX_N = 24


def minimum_distances(cx: SurfaceComplex, method: str = "auto") -> Distances:
    """Exact code distances of a surface complex.

    method "exhaustive" enumerates kernels (exponential in n - rank),
    "cycle" runs the graph systole search, "auto" picks exhaustive for
    n <= 24 and cycle above.
    """
    if method == "auto":
        method = "exhaustive" if cx.n_edges <= _EXHAUSTIVE_MAX_N else "cycle"
    if method == "exhaustive":
        return exhaustive_distances(css_from_complex(cx))
    if method == "cycle":
        return cycle_distances(cx)
    raise ValueError(f"unknown method {method!r}")


# -------------------------------------------------------------- text format

def dump_complex(cx: SurfaceComplex) -> str:
    """Plain-text form: header counts, then one line per edge and face."""
    lines = [f"{cx.n_vertices} {cx.n_edges} {cx.n_faces}"]
    for u, v in cx.edge_endpoints:
        lines.append(f"{u} {v}")
    for b in cx.face_boundaries:
        lines.append(" ".join(str(e) for e in b))
    return "\n".join(lines) + "\n"


def load_complex(text: str) -> SurfaceComplex:
    """Inverse of dump_complex; blank lines and # comments are skipped."""
    rows = [ln.split() for ln in text.splitlines()
            if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows or len(rows[0]) != 3:
        raise ValueError("expected a 'V E F' header line")
    nv, ne, nf = (int(x) for x in rows[0])
    if len(rows) != 1 + ne + nf:
        raise ValueError(f"expected {ne} edge and {nf} face lines, got {len(rows) - 1}")
    endpoints = []
    for r in rows[1:1 + ne]:
        if len(r) != 2:
            raise ValueError(f"edge line needs two endpoints: {' '.join(r)}")
        endpoints.append((int(r[0]), int(r[1])))
    faces = tuple(tuple(int(e) for e in r) for r in rows[1 + ne:])
    return SurfaceComplex(nv, ne, nf, tuple(endpoints), faces)
