"""Construction of the cube complex dual to a wall space.

The vertices are the admissible sections reachable from a base
principal section by single-wall flips; edges join sections differing
on exactly one wall.  A k-corner is a vertex together with k pairwise
crossing walls all flipping admissibly there; each corner spans a
unique k-cube whose 2^k vertices are obtained by flipping subsets of
the corner's walls.  Cubes are keyed canonically by (index of the
vertex choosing every listed side of the cube's walls, sorted wall
set), so the same cube found from different corners registers once.

Everything is deterministic: vertices are indexed in BFS discovery
order from the base with neighbour walls visited in id order.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .errors import BudgetError, CertificateError, InputError
from .sections import Section, admissible_flips, principal_section
from .wallspace import WallSpace

__all__ = [
    "DEFAULT_MAX_VERTICES",
    "MAX_VERTICES_ENV",
    "CubeComplex",
    "Corner",
    "VertexLink",
    "ComplexityBudgetExceeded",
    "AdmissibilityAssertionFailed",
    "FlagViolation",
    "NotInComponent",
    "build_component",
    "attach_cubes",
    "build_complex",
    "find_corners",
    "dimension",
    "check_dimension_equals_intersection_number",
    "vertex_link",
    "check_flag",
    "graph_distance",
    "complex_to_dict",
    "complex_from_dict",
    "to_dot",
]

DEFAULT_MAX_VERTICES = 1 << 20
MAX_VERTICES_ENV = "CUBULATE_MAX_VERTICES"


class ComplexityBudgetExceeded(BudgetError):
    """The component grew past the configured vertex cap."""


class AdmissibilityAssertionFailed(CertificateError):
    """A cube vertex that must be admissible is missing: an internal bug."""


class FlagViolation(CertificateError):
    """A clique of squares in a vertex link spans no cube."""

    def __init__(self, vertex: int, walls: tuple[int, ...], message: str):
        super().__init__(message)
        self.vertex = vertex
        self.walls = walls


class NotInComponent(InputError):
    """A section or index is not a vertex of this complex."""


class Corner(NamedTuple):
    """A vertex index plus pairwise crossing walls flipping admissibly there."""

    vertex: int
    walls: tuple[int, ...]


@dataclass(frozen=True)
class VertexLink:
    """The link of a vertex: one point per incident edge wall, one
    (k-1)-simplex per k-corner."""

    vertex: int
    points: tuple[int, ...]
    simplices: tuple[tuple[int, ...], ...]


class CubeComplex:
    """A component of the admissible-section graph with attached cubes.

    Treat instances as immutable once attach_cubes has run; the
    ``vertices``, ``edges``, ``adjacency`` and ``cubes`` attributes are
    read-only views of the construction.
    """

    def __init__(
        self,
        space: WallSpace,
        base: Section,
        vertices: Sequence[Section],
        edges: Sequence[tuple[int, int, int]],
        adjacency: Sequence[dict[int, int]],
    ):
        self.space = space
        self.base = base
        self.vertices: tuple[Section, ...] = tuple(vertices)
        self.edges: tuple[tuple[int, int, int], ...] = tuple(edges)
        self.adjacency: tuple[dict[int, int], ...] = tuple(dict(a) for a in adjacency)
        self._index = {s: i for i, s in enumerate(self.vertices)}
        self.cubes: dict[int, dict[tuple[int, tuple[int, ...]], None]] = {}
        self.cubes_attached = False

    # -- lookups ----------------------------------------------------------

    def find(self, section: Section) -> int | None:
        return self._index.get(section)

    def index_of(self, v: "Section | int") -> int:
        if isinstance(v, Section):
            i = self._index.get(v)
            if i is None:
                raise NotInComponent(f"section {v.encode()} is not a vertex")
            return i
        if isinstance(v, bool) or not isinstance(v, int):
            raise NotInComponent(f"not a vertex: {v!r}")
        if not 0 <= v < len(self.vertices):
            raise NotInComponent(f"vertex index {v} outside 0..{len(self.vertices) - 1}")
        return v

    def section(self, i: int) -> Section:
        return self.vertices[self.index_of(i)]

    def neighbors(self, i: int) -> list[tuple[int, int]]:
        """(wall, neighbour index) pairs in ascending wall order."""
        adj = self.adjacency[self.index_of(i)]
        return [(w, adj[w]) for w in sorted(adj)]

    def edge_wall(self, i: int, j: int) -> int:
        """The wall labelling the edge between two adjacent vertices."""
        for w, n in self.adjacency[self.index_of(i)].items():
            if n == self.index_of(j):
                return w
        raise InputError(f"vertices {i} and {j} are not adjacent")

    # -- traversal ----------------------------------------------------------

    def bfs_tree(self, start: int) -> tuple[list[int], list[int]]:
        """Distances and BFS parents from a vertex index; unreached
        entries are -1.  Neighbours are visited in wall id order."""
        start = self.index_of(start)
        dist = [-1] * len(self.vertices)
        parent = [-1] * len(self.vertices)
        dist[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            adj = self.adjacency[u]
            for w in sorted(adj):
                v = adj[w]
                if dist[v] < 0:
                    dist[v] = dist[u] + 1
                    parent[v] = u
                    queue.append(v)
        return dist, parent

    def distances_from_index(self, start: int) -> list[int]:
        return self.bfs_tree(start)[0]

    def f_vector(self) -> tuple[int, ...]:
        """(vertices, edges, squares, 3-cubes, ...) up to the dimension."""
        counts = [len(self.vertices), len(self.edges)]
        for k in sorted(self.cubes):
            counts.append(len(self.cubes[k]))
        return tuple(counts)

    def __repr__(self) -> str:
        return (
            f"CubeComplex(vertices={len(self.vertices)}, edges={len(self.edges)}, "
            f"cubes={ {k: len(v) for k, v in self.cubes.items()} })"
        )


def resolve_max_vertices(requested: int | None = None) -> int:
    """The vertex cap: explicit argument, else the environment override
    CUBULATE_MAX_VERTICES, else the default 2^20."""
    if requested is not None:
        if isinstance(requested, bool) or not isinstance(requested, int) or requested < 1:
            raise InputError(f"vertex cap must be a positive integer, got {requested!r}")
        return requested
    env = os.environ.get(MAX_VERTICES_ENV)
    if env is not None:
        try:
            cap = int(env)
        except ValueError:
            raise InputError(f"{MAX_VERTICES_ENV} must be an integer, got {env!r}")
        if cap < 1:
            raise InputError(f"{MAX_VERTICES_ENV} must be positive, got {cap}")
        return cap
    return DEFAULT_MAX_VERTICES


def build_component(
    space: WallSpace,
    base_point: int = 0,
    max_vertices: int | None = None,
) -> CubeComplex:
    """BFS the component of the base point's principal section.

    Vertices receive indices in discovery order; flips are tried in wall
    id order, so the construction is deterministic.  Raises
    ComplexityBudgetExceeded when the component outgrows the cap.
    """
    cap = resolve_max_vertices(max_vertices)
    sigma = principal_section(space, base_point)
    vertices = [sigma]
    index = {sigma: 0}
    adjacency: list[dict[int, int]] = [{}]
    edges: set[tuple[int, int, int]] = set()
    queue = deque([0])
    while queue:
        ui = queue.popleft()
        s = vertices[ui]
        for w in admissible_flips(space, s):
            t = s.toggle(w)
            vi = index.get(t)
            if vi is None:
                if len(vertices) >= cap:
                    raise ComplexityBudgetExceeded(
                        f"component exceeds the vertex cap {cap}"
                    )
                vi = len(vertices)
                vertices.append(t)
                index[t] = vi
                adjacency.append({})
                queue.append(vi)
            edges.add((min(ui, vi), max(ui, vi), w))
            adjacency[ui][w] = vi
            adjacency[vi][w] = ui
    return CubeComplex(space, sigma, vertices, sorted(edges), adjacency)


def _cliques(cands: Sequence[int], cross: Sequence[int], min_size: int) -> Iterable[tuple[int, ...]]:
    """All cliques of the crossing graph among the candidate walls with at
    least min_size members, in lexicographic order."""
    out: list[tuple[int, ...]] = []

    def grow(prefix: tuple[int, ...], rest: Sequence[int]) -> None:
        for idx, w in enumerate(rest):
            nxt = prefix + (w,)
            if len(nxt) >= min_size:
                out.append(nxt)
            compatible = [x for x in rest[idx + 1 :] if cross[w] >> x & 1]
            if compatible:
                grow(nxt, compatible)

    grow((), list(cands))
    return out


def _k_cliques(cands: Sequence[int], cross: Sequence[int], k: int) -> Iterable[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []

    def grow(prefix: tuple[int, ...], rest: Sequence[int]) -> None:
        if len(prefix) == k:
            out.append(prefix)
            return
        need = k - len(prefix)
        for idx, w in enumerate(rest):
            if len(rest) - idx < need:
                return
            compatible = [x for x in rest[idx + 1 :] if cross[w] >> x & 1]
            grow(prefix + (w,), compatible)

    grow((), list(cands))
    return out


def _verify_cube(X: CubeComplex, base_index: int, walls: tuple[int, ...]) -> None:
    """Assert that all 2^k vertices and the 1-skeleton of the cube spanned
    at the base vertex are present in the complex."""
    base = X.vertices[base_index]
    k = len(walls)
    ids = []
    for m in range(1 << k):
        chosen = [walls[j] for j in range(k) if m >> j & 1]
        t = base.toggle(*chosen) if chosen else base
        ti = X.find(t)
        if ti is None:
            raise AdmissibilityAssertionFailed(
                f"cube at vertex {base_index} over walls {list(walls)}: "
                f"vertex {t.encode()} is not in the component"
            )
        ids.append(ti)
    for m in range(1 << k):
        for j in range(k):
            if m >> j & 1:
                continue
            m2 = m | (1 << j)
            if X.adjacency[ids[m]].get(walls[j]) != ids[m2]:
                raise AdmissibilityAssertionFailed(
                    f"cube at vertex {base_index} over walls {list(walls)}: "
                    f"missing edge on wall {walls[j]}"
                )


def attach_cubes(X: CubeComplex) -> CubeComplex:
    """Attach one cube per corner, keyed canonically; idempotent.

    Corners are enumerated at each cube's canonical vertex (the one
    choosing every listed side of the cube's walls), so every cube is
    found exactly once; its full vertex set and 1-skeleton are verified
    during attachment.
    """
    if X.cubes_attached:
        return X
    cross = X.space._crossing_masks
    cubes: dict[int, dict[tuple[int, tuple[int, ...]], None]] = {}
    for vi, s in enumerate(X.vertices):
        zero_walls = [w for w in sorted(X.adjacency[vi]) if s.bits[w] == 0]
        for clique in _cliques(zero_walls, cross, 2):
            _verify_cube(X, vi, clique)
            cubes.setdefault(len(clique), {})[(vi, clique)] = None
    X.cubes = {k: cubes[k] for k in sorted(cubes)}
    X.cubes_attached = True
    return X


def build_complex(
    space: WallSpace,
    base_point: int = 0,
    max_vertices: int | None = None,
) -> CubeComplex:
    """build_component followed by attach_cubes."""
    return attach_cubes(build_component(space, base_point, max_vertices))


def find_corners(X: CubeComplex, k: int) -> list[Corner]:
    """All k-corners, ordered by (vertex index, wall tuple)."""
    if isinstance(k, bool) or not isinstance(k, int) or k < 2:
        raise InputError(f"corner size must be an integer >= 2, got {k!r}")
    cross = X.space._crossing_masks
    out: list[Corner] = []
    for vi in range(len(X.vertices)):
        incident = sorted(X.adjacency[vi])
        out.extend(Corner(vi, c) for c in _k_cliques(incident, cross, k))
    return out


def dimension(X: CubeComplex) -> int:
    """Largest k with a k-cube; 1 for edge-only, 0 for a lone vertex."""
    if not X.cubes_attached:
        raise InputError("attach cubes before asking for the dimension")
    if X.cubes:
        return max(X.cubes)
    return 1 if X.edges else 0


def check_dimension_equals_intersection_number(X: CubeComplex) -> bool:
    """Empirical comparison of the complex dimension with the maximum
    pairwise-crossing wall family; reported, not asserted."""
    return dimension(X) == X.space.intersection_number()


def vertex_link(X: CubeComplex, v: "Section | int") -> VertexLink:
    """The link of a vertex: incident walls as points, corners as
    simplices (a k-corner contributes a (k-1)-simplex)."""
    vi = X.index_of(v)
    cross = X.space._crossing_masks
    incident = tuple(sorted(X.adjacency[vi]))
    simplices = tuple(_cliques(incident, cross, 2))
    return VertexLink(vertex=vi, points=incident, simplices=simplices)


def _cube_key(
    X: CubeComplex, vi: int, walls: tuple[int, ...]
) -> tuple[int, tuple[int, ...]] | None:
    """Canonical key of the cube through the vertex spanned by the walls,
    or None when the canonical vertex is missing."""
    s = X.vertices[vi]
    ones = [w for w in walls if s.bits[w] == 1]
    base = s.toggle(*ones) if ones else s
    bi = X.find(base)
    if bi is None:
        return None
    return (bi, tuple(sorted(walls)))


def check_flag(X: CubeComplex) -> bool:
    """Certify that every vertex link is a flag complex.

    In each link, join two incident walls when the square they span at
    the vertex is a registered cube; every clique of that graph must
    then carry a registered cube of matching dimension.  Works on
    externally supplied complexes, so a mutilated cube dictionary is
    detected and reported with a witness clique.
    """
    if not X.cubes_attached:
        raise InputError("attach cubes before checking the flag condition")
    squares = X.cubes.get(2, {})
    for vi in range(len(X.vertices)):
        incident = sorted(X.adjacency[vi])
        link_adj = [0] * X.space.wall_count
        for i, w1 in enumerate(incident):
            for w2 in incident[i + 1 :]:
                if _cube_key(X, vi, (w1, w2)) in squares:
                    link_adj[w1] |= 1 << w2
                    link_adj[w2] |= 1 << w1
        for clique in _cliques(incident, link_adj, 3):
            key = _cube_key(X, vi, clique)
            if key is None or key not in X.cubes.get(len(clique), {}):
                raise FlagViolation(
                    vi,
                    clique,
                    f"vertex {vi}: walls {list(clique)} span pairwise squares "
                    f"but no {len(clique)}-cube is registered",
                )
    return True


def graph_distance(X: CubeComplex, u: "Section | int", v: "Section | int") -> int:
    """Shortest edge-path length between two vertices (BFS)."""
    ui = X.index_of(u)
    vi = X.index_of(v)
    d = X.distances_from_index(ui)[vi]
    if d < 0:
        raise NotInComponent(f"vertices {ui} and {vi} are not connected")
    return d


# -- serialization ----------------------------------------------------------


def complex_to_dict(X: CubeComplex) -> dict:
    return {
        "walls": X.space.wall_count,
        "base": X.base.encode(),
        "vertices": [s.encode() for s in X.vertices],
        "edges": [list(e) for e in X.edges],
        "cubes": {
            str(k): [[b, list(walls)] for b, walls in sorted(X.cubes[k])]
            for k in sorted(X.cubes)
        },
    }


def complex_from_dict(space: WallSpace, data: object) -> CubeComplex:
    """Rebuild a complex from its JSON form without re-deriving cubes.

    Structural well-formedness (edge labels consistent with the vertex
    encodings) is enforced; completeness of the cube dictionary is not,
    so broken complexes can be loaded and then failed by check_flag.
    """
    if not isinstance(data, dict):
        raise InputError("complex input must be a JSON object")
    missing = {"walls", "base", "vertices", "edges", "cubes"} - set(data)
    if missing:
        raise InputError(f"complex input lacks keys: {sorted(missing)}")
    if data["walls"] != space.wall_count:
        raise InputError(
            f"complex has {data['walls']} walls, wall space has {space.wall_count}"
        )
    raw_vertices = data["vertices"]
    if not isinstance(raw_vertices, list) or not raw_vertices:
        raise InputError("'vertices' must be a nonempty list of encodings")
    vertices = [Section.decode(t, space.wall_count) for t in raw_vertices]
    index: dict[Section, int] = {}
    for i, s in enumerate(vertices):
        if s in index:
            raise InputError(f"duplicate vertex encoding {s.encode()}")
        index[s] = i
    base = Section.decode(data["base"], space.wall_count)
    if base not in index:
        raise InputError("base encoding is not among the vertices")
    adjacency: list[dict[int, int]] = [{} for _ in vertices]
    edges = []
    for e in data["edges"]:
        if not (isinstance(e, list) and len(e) == 3):
            raise InputError(f"edge entries must be [u, v, wall], got {e!r}")
        u, v, w = e
        for i in (u, v):
            if not isinstance(i, int) or not 0 <= i < len(vertices):
                raise InputError(f"edge {e!r}: vertex index out of range")
        if not isinstance(w, int) or not 0 <= w < space.wall_count:
            raise InputError(f"edge {e!r}: wall out of range")
        diff = [
            i
            for i in range(space.wall_count)
            if vertices[u].bits[i] != vertices[v].bits[i]
        ]
        if diff != [w]:
            raise InputError(f"edge {e!r}: endpoints do not differ exactly on wall {w}")
        adjacency[u][w] = v
        adjacency[v][w] = u
        edges.append((min(u, v), max(u, v), w))
    X = CubeComplex(space, base, vertices, sorted(set(edges)), adjacency)
    cubes: dict[int, dict[tuple[int, tuple[int, ...]], None]] = {}
    raw_cubes = data["cubes"]
    if not isinstance(raw_cubes, dict):
        raise InputError("'cubes' must be an object keyed by dimension")
    for key in raw_cubes:
        try:
            k = int(key)
        except (TypeError, ValueError):
            raise InputError(f"cube dimension key {key!r} is not an integer")
        if k < 2:
            raise InputError(f"cube dimension {k} must be >= 2")
        registry: dict[tuple[int, tuple[int, ...]], None] = {}
        for entry in raw_cubes[key]:
            if not (isinstance(entry, list) and len(entry) == 2):
                raise InputError(f"cube entries must be [vertex, [walls]], got {entry!r}")
            b, walls = entry
            if not isinstance(b, int) or not 0 <= b < len(vertices):
                raise InputError(f"cube entry {entry!r}: vertex index out of range")
            if (
                not isinstance(walls, list)
                or len(walls) != k
                or sorted(set(walls)) != walls
                or any(not isinstance(w, int) or not 0 <= w < space.wall_count for w in walls)
            ):
                raise InputError(f"cube entry {entry!r}: walls must be {k} sorted wall ids")
            registry[(b, tuple(walls))] = None
        cubes[k] = registry
    X.cubes = {k: cubes[k] for k in sorted(cubes)}
    X.cubes_attached = True
    return X


def to_dot(X: CubeComplex) -> str:
    """DOT text of the 1-skeleton; edges carry the wall id, the base
    vertex is drawn with a double border."""
    lines = ["graph cubing {", "  node [shape=circle];"]
    base_index = X.index_of(X.base)
    for i, s in enumerate(X.vertices):
        mark = ", peripheries=2" if i == base_index else ""
        lines.append(f'  v{i} [label="{s.encode()}"{mark}];')
    for u, v, w in X.edges:
        lines.append(f'  v{u} -- v{v} [label="{w}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
