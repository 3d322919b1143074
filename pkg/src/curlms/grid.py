"""Uniform fine and coarse meshes on the unit square with edge-DOF numbering.

Lowest-order edge elements carry one DOF per mesh edge (the tangential
integral along the edge).  Numbering layout, fixed for file I/O and
reproducibility:

* fine cells:   id = j*n + i                  (i = column, j = row)
* x-edges:      id = j*n + i                  for i in 0..n-1, j in 0..n
* y-edges:      id = n*(n+1) + j*(n+1) + i    for i in 0..n,   j in 0..n-1
* nodes:        id = j*(n+1) + i

All x-edges point +x and all y-edges point +y; element-local curl signs are
handled in assembly, never here.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import IncompatibleGridsError, InvalidMeshError, NotInteriorEdgeError


class FineGrid:
    """n-by-n mesh of square cells on [0,1]^2, h = 1/n."""

    def __init__(self, n: int):
        if n < 2:
            raise InvalidMeshError(f"fine grid needs n >= 2, got {n}")
        self.n = int(n)
        self.nx = self.ny = self.n
        self.h = 1.0 / self.n
        self.n_cells = self.n * self.n
        self.n_xedges = self.n * (self.n + 1)
        self.n_yedges = (self.n + 1) * self.n
        self.total_edges = self.n_xedges + self.n_yedges
        self.n_nodes = (self.n + 1) ** 2

        n_ = self.n
        ii, jj = np.meshgrid(np.arange(n_), np.arange(n_), indexing="xy")
        ii = ii.ravel()  # cell column, row-major over (row j, col i)
        jj = jj.ravel()
        # per-cell edge ids in (bottom, top, left, right) order
        self.cell_edges = np.column_stack(
            [
                self.xedge_id(ii, jj),
                self.xedge_id(ii, jj + 1),
                self.yedge_id(ii, jj),
                self.yedge_id(ii + 1, jj),
            ]
        )
        self.cell_centers = np.column_stack([(ii + 0.5) * self.h, (jj + 0.5) * self.h])

        self.boundary_edges = np.zeros(self.total_edges, dtype=bool)
        i = np.arange(n_)
        self.boundary_edges[self.xedge_id(i, 0)] = True
        self.boundary_edges[self.xedge_id(i, n_)] = True
        self.boundary_edges[self.yedge_id(0, i)] = True
        self.boundary_edges[self.yedge_id(n_, i)] = True
        self.n_boundary_edges = int(self.boundary_edges.sum())

        # (tail, head) node of every edge under the +x/+y orientation
        tails = np.empty(self.total_edges, dtype=np.int64)
        heads = np.empty(self.total_edges, dtype=np.int64)
        ix, jx = np.meshgrid(np.arange(n_), np.arange(n_ + 1), indexing="xy")
        e = self.xedge_id(ix.ravel(), jx.ravel())
        tails[e] = self.node_id(ix.ravel(), jx.ravel())
        heads[e] = self.node_id(ix.ravel() + 1, jx.ravel())
        iy, jy = np.meshgrid(np.arange(n_ + 1), np.arange(n_), indexing="xy")
        e = self.yedge_id(iy.ravel(), jy.ravel())
        tails[e] = self.node_id(iy.ravel(), jy.ravel())
        heads[e] = self.node_id(iy.ravel(), jy.ravel() + 1)
        self.edge_nodes = np.column_stack([tails, heads])

        node_i, node_j = np.meshgrid(np.arange(n_ + 1), np.arange(n_ + 1), indexing="xy")
        interior = (node_i > 0) & (node_i < n_) & (node_j > 0) & (node_j < n_)
        self.interior_nodes = self.node_id(node_i[interior], node_j[interior])
        self.interior_nodes.sort()

    def xedge_id(self, i, j):
        return np.asarray(j) * self.n + np.asarray(i)

    def yedge_id(self, i, j):
        return self.n_xedges + np.asarray(j) * (self.n + 1) + np.asarray(i)

    def cell_id(self, i, j):
        return np.asarray(j) * self.n + np.asarray(i)

    def node_id(self, i, j):
        return np.asarray(j) * (self.n + 1) + np.asarray(i)

    def is_x_edge(self, edge_id) -> bool:
        return edge_id < self.n_xedges

    def __repr__(self):
        return f"FineGrid(n={self.n})"


@dataclass(frozen=True)
class Neighborhood:
    """The two coarse cells sharing an interior coarse edge, with index sets.

    ``interior_fine_edges`` (sorted ascending) lists the fine edges strictly
    inside the neighborhood; these are the DOFs a local function may carry,
    the tangential trace on the neighborhood boundary being zero.  The fine
    edges lying on the coarse edge itself appear in ``edge_fine_edges``,
    ordered by increasing coordinate along the edge.
    """

    edge_id: int
    coarse_cells: tuple[int, int]
    fine_cells: np.ndarray
    interior_fine_edges: np.ndarray
    edge_fine_edges: np.ndarray

    @property
    def J(self) -> int:
        return len(self.edge_fine_edges)


class CoarseGrid:
    """N-by-N coarse mesh whose cells are r-by-r blocks of fine cells.

    Coarse edges are numbered vertical-first: vertical edge (I, J) at
    x = I*H spanning [J*H, (J+1)*H] has id I*N + J; horizontal edge (I, J)
    at y = J*H spanning [I*H, (I+1)*H] has id (N+1)*N + J*N + I.
    """

    def __init__(self, fine: FineGrid, N: int):
        if N < 1 or fine.n % N != 0:
            raise IncompatibleGridsError(
                f"coarse count N={N} must divide fine count n={fine.n}"
            )
        self.fine = fine
        self.N = int(N)
        self.H = 1.0 / self.N
        self.r = fine.n // self.N
        self.n_cells = self.N * self.N
        self.n_vedges = (self.N + 1) * self.N
        self.n_hedges = (self.N + 1) * self.N
        self.total_edges = self.n_vedges + self.n_hedges

        interior = np.zeros(self.total_edges, dtype=bool)
        for I in range(1, self.N):
            for J in range(self.N):
                interior[self.vedge_id(I, J)] = True
        for J in range(1, self.N):
            for I in range(self.N):
                interior[self.hedge_id(I, J)] = True
        self.edge_is_interior = interior
        self.interior_edges = np.flatnonzero(interior)
        self.N_e = len(self.interior_edges)

        self._block_cells_cache: dict[int, np.ndarray] = {}
        self._block_interior_cache: dict[int, np.ndarray] = {}

    def vedge_id(self, I: int, J: int) -> int:
        return I * self.N + J

    def hedge_id(self, I: int, J: int) -> int:
        return self.n_vedges + J * self.N + I

    def cell_id(self, I: int, J: int) -> int:
        return J * self.N + I

    def edge_position(self, edge_id: int) -> tuple[str, int, int]:
        """Decode an edge id to (orientation, I, J)."""
        if edge_id < self.n_vedges:
            return "v", edge_id // self.N, edge_id % self.N
        k = edge_id - self.n_vedges
        return "h", k % self.N, k // self.N

    def edge_cells(self, edge_id: int) -> tuple[int, int]:
        orient, I, J = self.edge_position(edge_id)
        if orient == "v":
            return self.cell_id(I - 1, J), self.cell_id(I, J)
        return self.cell_id(I, J - 1), self.cell_id(I, J)

    def edge_fine_edges(self, edge_id: int) -> np.ndarray:
        """Fine edges on a coarse edge, ordered by increasing coordinate."""
        orient, I, J = self.edge_position(edge_id)
        r, f = self.r, self.fine
        if orient == "v":
            return np.asarray(f.yedge_id(I * r, np.arange(J * r, (J + 1) * r)))
        return np.asarray(f.xedge_id(np.arange(I * r, (I + 1) * r), J * r))

    def block_fine_cells(self, cell_id: int) -> np.ndarray:
        """Fine cell ids of one coarse cell (row-major)."""
        if cell_id not in self._block_cells_cache:
            I, J = cell_id % self.N, cell_id // self.N
            r, f = self.r, self.fine
            ii, jj = np.meshgrid(
                np.arange(I * r, (I + 1) * r), np.arange(J * r, (J + 1) * r), indexing="xy"
            )
            self._block_cells_cache[cell_id] = np.asarray(
                f.cell_id(ii.ravel(), jj.ravel())
            )
        return self._block_cells_cache[cell_id]

    def block_interior_edges(self, cell_id: int) -> np.ndarray:
        """Fine edges strictly inside one coarse cell, sorted ascending."""
        if cell_id not in self._block_interior_cache:
            I, J = cell_id % self.N, cell_id // self.N
            self._block_interior_cache[cell_id] = _rect_interior_edges(
                self.fine, I * self.r, (I + 1) * self.r, J * self.r, (J + 1) * self.r
            )
        return self._block_interior_cache[cell_id]

    def __repr__(self):
        return f"CoarseGrid(N={self.N}, r={self.r})"


def _rect_interior_edges(f: FineGrid, i0: int, i1: int, j0: int, j1: int) -> np.ndarray:
    """Fine edges strictly inside the cell rectangle [i0,i1) x [j0,j1)."""
    xi, xj = np.meshgrid(np.arange(i0, i1), np.arange(j0 + 1, j1), indexing="xy")
    yi, yj = np.meshgrid(np.arange(i0 + 1, i1), np.arange(j0, j1), indexing="xy")
    edges = np.concatenate(
        [np.asarray(f.xedge_id(xi.ravel(), xj.ravel())),
         np.asarray(f.yedge_id(yi.ravel(), yj.ravel()))]
    )
    edges.sort()
    return edges


def build_fine_grid(n: int) -> FineGrid:
    return FineGrid(n)


def build_coarse_grid(fine: FineGrid, N: int) -> CoarseGrid:
    return CoarseGrid(fine, N)


def neighborhood(coarse: CoarseGrid, edge_id: int) -> Neighborhood:
    """Index sets of the union of the two coarse cells sharing an edge."""
    if edge_id < 0 or edge_id >= coarse.total_edges:
        raise NotInteriorEdgeError(f"no coarse edge with id {edge_id}")
    if not coarse.edge_is_interior[edge_id]:
        raise NotInteriorEdgeError(f"coarse edge {edge_id} lies on the domain boundary")
    orient, I, J = coarse.edge_position(edge_id)
    r, f = coarse.r, coarse.fine
    c0, c1 = coarse.edge_cells(edge_id)
    cells = np.concatenate([coarse.block_fine_cells(c0), coarse.block_fine_cells(c1)])
    if orient == "v":
        interior = _rect_interior_edges(f, (I - 1) * r, (I + 1) * r, J * r, (J + 1) * r)
    else:
        interior = _rect_interior_edges(f, I * r, (I + 1) * r, (J - 1) * r, (J + 1) * r)
    return Neighborhood(
        edge_id=edge_id,
        coarse_cells=(c0, c1),
        fine_cells=cells,
        interior_fine_edges=interior,
        edge_fine_edges=coarse.edge_fine_edges(edge_id),
    )
