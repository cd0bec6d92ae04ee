"""Simplicial complexes of dimension ≤ 2 and their fundamental groups."""

import json
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import NamedTuple

from dw_motion.errors import TriangulationError
from dw_motion.presentation.fp import Presentation
from dw_motion.presentation.words import Word

Edge = tuple[int, int]  # Always (low, high)
Triangle = tuple[int, int, int]  # Always sorted


@dataclass(frozen=True)
class Triangulation:
    """A simplicial complex given by its triangles and optional extra edges.

    Edges are oriented low → high; a coloring assigns the inverse element to
    the opposite orientation. Boundary edges are those lying in exactly one
    triangle.
    """

    vertex_count: int
    triangles: tuple[Triangle, ...]
    boundary_vertices: frozenset[int] = frozenset()
    extra_edges: tuple[Edge, ...] = field(default=())

    def __post_init__(self) -> None:
        if self.vertex_count < 1:
            raise TriangulationError("A triangulation needs at least one vertex")
        triangles = []
        for tri in self.triangles:
            if len(tri) != 3 or len(set(tri)) != 3:
                raise TriangulationError(f"Degenerate triangle {tri}")
            self._check_vertices(tri)
            triangles.append(tuple(sorted(tri)))
        edges = []
        for edge in self.extra_edges:
            if len(edge) != 2 or edge[0] == edge[1]:
                raise TriangulationError(f"Degenerate edge {edge}")
            self._check_vertices(edge)
            edges.append(tuple(sorted(edge)))
        self._check_vertices(tuple(self.boundary_vertices))
        object.__setattr__(self, "triangles", tuple(triangles))
        object.__setattr__(self, "extra_edges", tuple(edges))
        object.__setattr__(self, "boundary_vertices", frozenset(self.boundary_vertices))

    def _check_vertices(self, vertices: tuple[int, ...]) -> None:
        for v in vertices:
            if not 0 <= v < self.vertex_count:
                raise TriangulationError(
                    f"Vertex {v} out of range 0..{self.vertex_count - 1}"
                )

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        found = set(self.extra_edges)
        for a, b, c in self.triangles:
            found.update({(a, b), (b, c), (a, c)})
        return tuple(sorted(found))

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        return {edge: i for i, edge in enumerate(self.edges)}

    def triangle_edges(self, tri: Triangle) -> tuple[int, int, int]:
        """Indices of the edges (v0v1, v1v2, v0v2)."""
        a, b, c = tri
        idx = self.edge_index
        return idx[(a, b)], idx[(b, c)], idx[(a, c)]

    @cached_property
    def boundary_edges(self) -> tuple[Edge, ...]:
        """Edges in exactly one triangle.

        Raises:
            TriangulationError: If such an edge leaves the boundary vertex set
        """
        counts = dict.fromkeys(self.edges, 0)
        for tri in self.triangles:
            a, b, c = tri
            for edge in ((a, b), (b, c), (a, c)):
                counts[edge] += 1
        found = tuple(edge for edge, n in counts.items() if n == 1)
        for a, b in found:
            if a not in self.boundary_vertices or b not in self.boundary_vertices:
                raise TriangulationError(
                    f"Boundary edge {(a, b)} has a vertex outside boundary_vertices"
                )
        return found

    @property
    def boundary_vertex_count(self) -> int:
        return len(self.boundary_vertices)


class Cylinder(NamedTuple):
    """A triangulation of Y×I restricting to the base triangulation of Y."""

    triangulation: Triangulation  # Y×I
    base: Triangulation  # Y
    ends: tuple[tuple[int, ...], tuple[int, ...]]  # Vertex maps Y → Y×I


def triangulation_from_dict(data: dict) -> Triangulation:
    try:
        return Triangulation(
            vertex_count=int(data["vertices"]),
            triangles=tuple(tuple(t) for t in data["triangles"]),
            boundary_vertices=frozenset(data.get("boundary_vertices", [])),
            extra_edges=tuple(tuple(e) for e in data.get("edges", [])),
        )
    except (KeyError, TypeError) as exc:
        raise TriangulationError(f"Malformed triangulation data: {exc}") from None


def load_triangulation(path: Path) -> Triangulation:
    """Read a triangulation JSON file."""
    return triangulation_from_dict(json.loads(Path(path).read_text()))


def load_cylinder(path: Path) -> Cylinder:
    """Read a Y×I triangulation with its ``base`` and ``ends`` entries.

    Raises:
        TriangulationError: If the ends do not map Y onto the boundary
    """
    data = json.loads(Path(path).read_text())
    if "base" not in data or "ends" not in data:
        raise TriangulationError(f"{path} needs 'base' and 'ends' for a cylinder")
    cylinder = Cylinder(
        triangulation=triangulation_from_dict(data),
        base=triangulation_from_dict(data["base"]),
        ends=(tuple(data["ends"][0]), tuple(data["ends"][1])),
    )
    check_cylinder(cylinder)
    return cylinder


def end_edge(cylinder: Cylinder, end: int, edge: Edge) -> tuple[Edge, bool]:
    """Image of a base edge in one end, and whether its orientation flips."""
    vertex_map = cylinder.ends[end]
    a, b = vertex_map[edge[0]], vertex_map[edge[1]]
    return (min(a, b), max(a, b)), a > b


def check_cylinder(cylinder: Cylinder) -> None:
    """The two ends must map the base edges bijectively onto the boundary edges."""
    base, tri = cylinder.base, cylinder.triangulation
    if base.triangles:
        raise TriangulationError("Only 1-dimensional bases are supported")
    for vertex_map in cylinder.ends:
        if len(vertex_map) != base.vertex_count:
            raise TriangulationError("Each end must map every base vertex")
        if len(set(vertex_map)) != len(vertex_map):
            raise TriangulationError("End maps must be injective")
    images = [end_edge(cylinder, e, edge)[0] for e in (0, 1) for edge in base.edges]
    if sorted(images) != sorted(tri.boundary_edges):
        raise TriangulationError("Ends do not match the boundary triangulation")


class SpanningTree(NamedTuple):
    """BFS spanning tree of the 1-skeleton rooted at vertex 0."""

    tree_edges: frozenset[int]  # Edge indices in the tree
    generator_edges: tuple[int, ...]  # Non-tree edge indices, in edge order


def spanning_tree(triangulation: Triangulation) -> SpanningTree:
    """
    Build a BFS spanning tree of the 1-skeleton from vertex 0.

    Raises:
        TriangulationError: If the complex is disconnected
    """
    adjacency: dict[int, list[tuple[int, int]]] = {
        v: [] for v in range(triangulation.vertex_count)
    }
    for i, (a, b) in enumerate(triangulation.edges):
        adjacency[a].append((b, i))
        adjacency[b].append((a, i))
    seen = {0}
    tree: set[int] = set()
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for w, i in adjacency[v]:
            if w not in seen:
                seen.add(w)
                tree.add(i)
                queue.append(w)
    if len(seen) != triangulation.vertex_count:
        raise TriangulationError(
            f"Complex is disconnected ({len(seen)} of "
            f"{triangulation.vertex_count} vertices reachable from 0)"
        )
    generators = tuple(
        i for i in range(len(triangulation.edges)) if i not in tree
    )
    return SpanningTree(frozenset(tree), generators)


def _eliminate_trivial_generators(
    names: list[str], relators: list[Word]
) -> tuple[list[str], list[Word]]:
    """Drop generators killed by one-letter relators, repeatedly."""
    while True:
        killed = next((r.letters[0][0] for r in relators if len(r) == 1), None)
        if killed is None:
            break
        relabel = {g: g - (g > killed) for g in range(len(names)) if g != killed}
        relators = [
            Word(tuple((relabel[g], e) for g, e in r.letters if g != killed))
            for r in relators
        ]
        names = names[:killed] + names[killed + 1 :]
    return names, [r for r in relators if r]


def presentation_from_triangulation(
    triangulation: Triangulation, reduce: bool = True
) -> Presentation:
    """
    π₁ of a connected complex from a maximal tree of its 1-skeleton.

    Generators are the non-tree edges (named ``e{i}_{j}``); each triangle
    v0<v1<v2 contributes the relator c(v0v1) c(v1v2) c(v0v2)^-1 with tree
    edges deleted. With ``reduce``, generators killed by one-letter relators
    are eliminated until none remain.

    Raises:
        TriangulationError: If the complex is disconnected
    """
    tree = spanning_tree(triangulation)
    position = {edge: g for g, edge in enumerate(tree.generator_edges)}
    names = [
        f"e{triangulation.edges[i][0]}_{triangulation.edges[i][1]}"
        for i in tree.generator_edges
    ]
    relators = []
    for tri in triangulation.triangles:
        e01, e12, e02 = triangulation.triangle_edges(tri)
        letters = [
            (position[i], sign)
            for i, sign in ((e01, 1), (e12, 1), (e02, -1))
            if i in position
        ]
        relators.append(Word(tuple(letters)))
    if reduce:
        names, relators = _eliminate_trivial_generators(names, relators)
    return Presentation(tuple(names), tuple(relators))
