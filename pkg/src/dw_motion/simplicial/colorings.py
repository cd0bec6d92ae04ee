"""Flat G-colorings of triangulations and the state-sum partition function."""

import json
import time
from collections import deque
from fractions import Fraction
from pathlib import Path
from typing import NamedTuple

from dw_motion.config import COLORING_STATE_CAP
from dw_motion.errors import ColoringScopeError, TriangulationError
from dw_motion.groups.finite import IDENTITY, FiniteGroup
from dw_motion.simplicial.triangulation import Edge, SpanningTree, Triangulation

Coloring = dict[Edge, int]  # Element on each edge, oriented low → high


class StateSumValue(NamedTuple):
    """Exact value count · |G|^(half_exponent / 2)."""

    count: int  # Number of colorings
    half_exponent: int  # Twice the exponent of |G|
    group_order: int  # |G|

    def normalized(self) -> "StateSumValue":
        """Move factors of |G| from count into the exponent."""
        count, k = self.count, self.half_exponent
        if count == 0:
            return StateSumValue(0, 0, self.group_order)
        if self.group_order > 1:
            while count % self.group_order == 0:
                count //= self.group_order
                k += 2
        else:
            k = 0
        return StateSumValue(count, k, self.group_order)

    def same_value(self, other: "StateSumValue") -> bool:
        return (
            self.group_order == other.group_order
            and self.normalized() == other.normalized()
        )

    def as_fraction(self) -> Fraction:
        """Exact rational value.

        Raises:
            ValueError: If the value involves an odd power of sqrt(|G|)
        """
        value = self.normalized()
        if value.half_exponent % 2:
            raise ValueError(f"{self} is not rational")
        return Fraction(value.count) * Fraction(value.group_order) ** (
            value.half_exponent // 2
        )

    def __float__(self) -> float:
        return self.count * self.group_order ** (self.half_exponent / 2)


def _check_boundary_coloring(
    triangulation: Triangulation, group: FiniteGroup, boundary: Coloring
) -> None:
    expected = set(triangulation.boundary_edges)
    given = {tuple(sorted(edge)) for edge in boundary}
    if given != expected:
        raise TriangulationError(
            "Boundary coloring must color exactly the boundary edges "
            f"{sorted(expected)}"
        )
    for edge, g in boundary.items():
        if not 0 <= g < group.order:
            raise TriangulationError(f"Edge {edge} colored by invalid element {g}")


def _free_edge_budget(n_free: int, order: int) -> None:
    if order > 1 and order**n_free > COLORING_STATE_CAP:
        raise ColoringScopeError(
            f"|G|^{n_free} = {order}^{n_free} states exceed "
            f"COLORING_STATE_CAP={COLORING_STATE_CAP}"
        )


def count_colorings(
    triangulation: Triangulation,
    group: FiniteGroup,
    boundary_coloring: Coloring | None = None,
    verbose: bool = False,
) -> int:
    """
    Count flat colorings, optionally extending a fixed boundary coloring.

    Backtracking over the edges: whenever a triangle has two colored edges
    the third is forced (c02 = c01 c12), and every completed triangle is
    checked for flatness.

    Args:
        triangulation: Complex to color
        group: Gauge group
        boundary_coloring: Colors of exactly the boundary edges (low → high)
        verbose: Print the count and timing

    Returns:
        #Col(M) or #Col(M, τ)

    Raises:
        TriangulationError: If the boundary coloring is malformed
        ColoringScopeError: If |G|^(free edges) exceeds COLORING_STATE_CAP
    """
    start = time.perf_counter()
    table, inverses = group.table, group.inverses
    edges = triangulation.edges
    colors = [-1] * len(edges)
    if boundary_coloring is not None:
        _check_boundary_coloring(triangulation, group, boundary_coloring)
        for (a, b), g in boundary_coloring.items():
            colors[triangulation.edge_index[(min(a, b), max(a, b))]] = (
                g if a < b else inverses[g]
            )

    free = [i for i, c in enumerate(colors) if c < 0]
    _free_edge_budget(len(free), group.order)

    tri_edges = [triangulation.triangle_edges(t) for t in triangulation.triangles]
    triangles_of: list[list[int]] = [[] for _ in edges]
    for t, (e01, e12, e02) in enumerate(tri_edges):
        for e in (e01, e12, e02):
            triangles_of[e].append(t)

    def flat(t: int) -> bool:
        e01, e12, e02 = tri_edges[t]
        return table[colors[e01]][colors[e12]] == colors[e02]

    for t, (e01, e12, e02) in enumerate(tri_edges):
        if min(colors[e01], colors[e12], colors[e02]) >= 0 and not flat(t):
            return 0

    def forced(e: int) -> int | None:
        """A value implied by some triangle with the other two edges colored."""
        for t in triangles_of[e]:
            e01, e12, e02 = tri_edges[t]
            c01, c12, c02 = colors[e01], colors[e12], colors[e02]
            if e == e02 and c01 >= 0 and c12 >= 0:
                return table[c01][c12]
            if e == e12 and c01 >= 0 and c02 >= 0:
                return table[inverses[c01]][c02]
            if e == e01 and c12 >= 0 and c02 >= 0:
                return table[c02][inverses[c12]]
        return None

    def consistent(e: int) -> bool:
        for t in triangles_of[e]:
            e01, e12, e02 = tri_edges[t]
            if colors[e01] >= 0 and colors[e12] >= 0 and colors[e02] >= 0:
                if not flat(t):
                    return False
        return True

    def visit(remaining: int) -> int:
        if remaining == 0:
            return 1
        uncolored = [e for e in free if colors[e] < 0]
        choice, value = uncolored[0], None
        for e in uncolored:
            value = forced(e)
            if value is not None:
                choice = e
                break
        candidates = range(group.order) if value is None else (value,)
        total = 0
        for g in candidates:
            colors[choice] = g
            if consistent(choice):
                total += visit(remaining - 1)
        colors[choice] = -1
        return total

    count = visit(len(free))
    if verbose:
        elapsed = time.perf_counter() - start
        print(f"  {count:,} colorings of {len(edges)} edges in {elapsed:.2f}s")
    return count


def partition_function(
    triangulation: Triangulation,
    group: FiniteGroup,
    boundary_coloring: Coloring | None = None,
) -> StateSumValue:
    """Z(M, τ) = |G|^(∂v/2 - v) · #Col(M, τ), kept exact."""
    count = count_colorings(triangulation, group, boundary_coloring)
    boundary_vertices = triangulation.boundary_vertex_count
    half_exponent = boundary_vertices - 2 * triangulation.vertex_count
    return StateSumValue(count, half_exponent, group.order)


def tree_transport(
    triangulation: Triangulation,
    tree: SpanningTree,
    coloring: list[int],
    group: FiniteGroup,
) -> list[int]:
    """Holonomy p(v) along the tree path from vertex 0 to each vertex."""
    table, inverses = group.table, group.inverses
    edges = triangulation.edges
    neighbours: dict[int, list[tuple[int, int]]] = {}
    for i in tree.tree_edges:
        a, b = edges[i]
        neighbours.setdefault(a, []).append((b, i))
        neighbours.setdefault(b, []).append((a, i))
    path = [IDENTITY] * triangulation.vertex_count
    seen = {0}
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for w, i in neighbours.get(v, []):
            if w in seen:
                continue
            step = coloring[i] if v < w else inverses[coloring[i]]
            path[w] = table[path[v]][step]
            seen.add(w)
            queue.append(w)
    return path


def holonomy(
    triangulation: Triangulation,
    tree: SpanningTree,
    coloring: list[int],
    group: FiniteGroup,
) -> tuple[int, ...]:
    """Images of the non-tree generators after gauge-fixing the tree to 1.

    The tuple is a hom from the unreduced tree presentation of π₁.
    """
    table, inverses = group.table, group.inverses
    path = tree_transport(triangulation, tree, coloring, group)
    images = []
    for i in tree.generator_edges:
        a, b = triangulation.edges[i]
        images.append(table[table[path[a]][coloring[i]]][inverses[path[b]]])
    return tuple(images)


def parse_boundary_coloring(data: dict, group: FiniteGroup) -> Coloring:
    """Coloring from ``{"edges": [[a, b, label], ...]}`` with group labels.

    The edge (a, b) is colored low → high; a pair given as a > b is stored
    with the inverse element.

    Raises:
        TriangulationError: If "edges" is missing or an entry is not an edge
            and a label
        LabelError: If a label does not name an element
    """
    edges = data.get("edges") if isinstance(data, dict) else None
    if not isinstance(edges, list):
        raise TriangulationError(
            'Boundary coloring must be an object with an "edges" list'
        )
    coloring: Coloring = {}
    for entry in edges:
        try:
            a, b, label = entry
            a, b = int(a), int(b)
        except (TypeError, ValueError):
            raise TriangulationError(
                f"Boundary entry {entry!r} is not [a, b, label]"
            ) from None
        g = group.element_index(str(label))
        if a > b:
            a, b, g = b, a, group.inverse(g)
        coloring[(a, b)] = g
    return coloring


def load_boundary_coloring(path: Path, group: FiniteGroup) -> Coloring:
    """Read a boundary coloring JSON file (see parse_boundary_coloring)."""
    return parse_boundary_coloring(json.loads(Path(path).read_text()), group)
