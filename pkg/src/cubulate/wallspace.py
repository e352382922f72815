"""Finite spaces with walls.

A wall space is a finite point set 0..N-1 together with a family of
proper subsets (half-spaces) closed under taking complements.  A wall
is the unordered pair {h, h^c}.  Wall i owns half-space ids 2*i (the
listed side, exactly as given in the input) and 2*i + 1 (its
complement), so complementation is the involution ``id ^ 1``.

Half-spaces are stored as bitmasks over the point set.  Instances are
immutable after construction; every operation is a pure read and safe
to share between threads.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from .errors import InputError

__all__ = [
    "WallSpace",
    "validate",
    "EmptyHalfSpace",
    "DuplicateWall",
    "PointOutOfRange",
    "EmptyWallFamily",
    "SameWall",
    "WallsCross",
]


class EmptyHalfSpace(InputError):
    """A listed side or its complement contains no point."""


class DuplicateWall(InputError):
    """Two walls induce the same partition of the point set."""


class PointOutOfRange(InputError):
    """A point index is not an integer in 0..N-1."""


class EmptyWallFamily(InputError):
    """The half-space family may not be empty."""


class SameWall(InputError):
    """A two-wall operation was called with the same wall twice."""


class WallsCross(InputError):
    """separates_from_wall is only defined for non-crossing walls."""


def _bit_indices(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class WallSpace:
    """A validated wall space.

    Construction performs full validation: every listed side must be a
    proper nonempty subset of the points, and no two walls may induce
    the same partition.
    """

    def __init__(self, point_count: int, walls: Sequence[Iterable[int]]):
        if isinstance(point_count, bool) or not isinstance(point_count, int):
            raise InputError("point count must be an integer")
        if point_count < 1:
            raise InputError("point count must be positive")
        full = (1 << point_count) - 1
        masks: list[int] = []
        seen: dict[int, int] = {}
        for w, side in enumerate(walls):
            mask = 0
            for p in side:
                if isinstance(p, bool) or not isinstance(p, int):
                    raise PointOutOfRange(f"wall {w}: point {p!r} is not an integer")
                if not 0 <= p < point_count:
                    raise PointOutOfRange(
                        f"wall {w}: point {p} outside 0..{point_count - 1}"
                    )
                mask |= 1 << p
            comp = full ^ mask
            if mask == 0:
                raise EmptyHalfSpace(f"wall {w}: listed side is empty")
            if comp == 0:
                raise EmptyHalfSpace(f"wall {w}: complement is empty")
            canon = min(mask, comp)
            if canon in seen:
                raise DuplicateWall(
                    f"walls {seen[canon]} and {w} induce the same partition"
                )
            seen[canon] = w
            masks.append(mask)
            masks.append(comp)
        if not masks:
            raise EmptyWallFamily("a wall space needs at least one wall")
        self._n = point_count
        self._full = full
        self._masks = tuple(masks)
        self._iw: int | None = None
        self._disjoint: tuple[int, ...] | None = None
        self._crossing: tuple[int, ...] | None = None

    # -- basic accessors ------------------------------------------------

    @property
    def point_count(self) -> int:
        return self._n

    @property
    def wall_count(self) -> int:
        return len(self._masks) // 2

    def points(self) -> range:
        return range(self._n)

    def walls(self) -> range:
        return range(self.wall_count)

    @staticmethod
    def complement(half_space_id: int) -> int:
        return half_space_id ^ 1

    def mask(self, half_space_id: int) -> int:
        """Bitmask of the half-space; id 2*i is wall i's listed side."""
        self._check_half_space(half_space_id)
        return self._masks[half_space_id]

    def points_in(self, half_space_id: int) -> tuple[int, ...]:
        return tuple(_bit_indices(self.mask(half_space_id)))

    def _check_point(self, p: int) -> None:
        if isinstance(p, bool) or not isinstance(p, int) or not 0 <= p < self._n:
            raise PointOutOfRange(f"point {p!r} outside 0..{self._n - 1}")

    def _check_wall(self, w: int) -> None:
        if isinstance(w, bool) or not isinstance(w, int) or not 0 <= w < self.wall_count:
            raise InputError(f"wall {w!r} outside 0..{self.wall_count - 1}")

    def _check_half_space(self, a: int) -> None:
        if isinstance(a, bool) or not isinstance(a, int) or not 0 <= a < len(self._masks):
            raise InputError(f"half-space id {a!r} outside 0..{len(self._masks) - 1}")

    # -- separation and the wall pseudo-metric --------------------------

    def side_of(self, wall: int, point: int) -> int:
        """0 when the point lies on the listed side, 1 on the complement."""
        self._check_wall(wall)
        self._check_point(point)
        return 0 if self._masks[2 * wall] >> point & 1 else 1

    def separates(self, wall: int, p: int, q: int) -> bool:
        return self.side_of(wall, p) != self.side_of(wall, q)

    def separating_walls(self, p: int, q: int) -> list[int]:
        self._check_point(p)
        self._check_point(q)
        out = []
        for w in range(self.wall_count):
            m = self._masks[2 * w]
            if (m >> p & 1) != (m >> q & 1):
                out.append(w)
        return out

    def wall_distance(self, p: int, q: int) -> int:
        """Number of walls separating p from q (a pseudo-metric)."""
        return len(self.separating_walls(p, q))

    # -- crossing -------------------------------------------------------

    def crosses(self, w1: int, w2: int) -> bool:
        """True when all four pairwise side intersections are nonempty."""
        self._check_wall(w1)
        self._check_wall(w2)
        if w1 == w2:
            raise SameWall(f"crossing is defined for distinct walls, got {w1} twice")
        h, hc = self._masks[2 * w1], self._masks[2 * w1 + 1]
        k, kc = self._masks[2 * w2], self._masks[2 * w2 + 1]
        return bool(h & k and h & kc and hc & k and hc & kc)

    @property
    def _crossing_masks(self) -> tuple[int, ...]:
        """Per wall, the bitmask of walls crossing it."""
        if self._crossing is None:
            m = self.wall_count
            adj = [0] * m
            for i in range(m):
                for j in range(i + 1, m):
                    if self.crosses(i, j):
                        adj[i] |= 1 << j
                        adj[j] |= 1 << i
            self._crossing = tuple(adj)
        return self._crossing

    def intersection_number(self) -> int:
        """Size of a maximum family of pairwise crossing walls (exact)."""
        if self._iw is None:
            self._iw = _max_clique_size(self._crossing_masks)
        return self._iw

    def separates_from_wall(self, k: int, p: int, h: int) -> bool:
        """True when wall k sits between the point p and wall h.

        Both walls must not cross; with k_p and h_p the sides containing
        p, the test is the proper inclusion k_p < h_p.
        """
        self._check_point(p)
        self._check_wall(k)
        self._check_wall(h)
        if k == h:
            raise SameWall(f"separates_from_wall needs distinct walls, got {k} twice")
        if self.crosses(k, h):
            raise WallsCross(f"walls {k} and {h} cross")
        kp = self._masks[2 * k + self.side_of(k, p)]
        hp = self._masks[2 * h + self.side_of(h, p)]
        return kp != hp and kp | hp == hp

    # -- admissibility support ------------------------------------------

    @property
    def _disjoint_table(self) -> tuple[int, ...]:
        """For each half-space id a, the bitmask over ids b with empty
        intersection.  Drives O(1) admissibility checks per wall."""
        if self._disjoint is None:
            total = len(self._masks)
            table = [0] * total
            for a in range(total):
                row = 0
                ma = self._masks[a]
                for b in range(total):
                    if not ma & self._masks[b]:
                        row |= 1 << b
                table[a] = row
            self._disjoint = tuple(table)
        return self._disjoint

    # -- serialization ---------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "points": self._n,
            "walls": [list(self.points_in(2 * w)) for w in range(self.wall_count)],
        }

    @classmethod
    def from_dict(cls, data: object) -> "WallSpace":
        if not isinstance(data, dict):
            raise InputError("wall space input must be a JSON object")
        missing = {"points", "walls"} - set(data)
        if missing:
            raise InputError(f"wall space input lacks keys: {sorted(missing)}")
        walls = data["walls"]
        if not isinstance(walls, list) or not all(isinstance(w, list) for w in walls):
            raise InputError("'walls' must be a list of point lists")
        return cls(data["points"], walls)

    def __repr__(self) -> str:
        return f"WallSpace(points={self._n}, walls={self.wall_count})"


def validate(point_count: int, walls: Sequence[Iterable[int]]) -> WallSpace:
    """Validate a raw description and return the wall space."""
    return WallSpace(point_count, walls)


def _max_clique_size(adj: Sequence[int]) -> int:
    """Exact maximum clique size via branch and bound.

    Vertices are relabelled along a degeneracy ordering, then searched
    with the classic greedy-colouring bound.  Exponential worst case,
    exact always; intended for the desk-scale wall counts here.
    """
    n = len(adj)
    if n == 0:
        return 0
    alive = (1 << n) - 1
    order = []
    for _ in range(n):
        v = min(
            (u for u in range(n) if alive >> u & 1),
            key=lambda u: ((adj[u] & alive).bit_count(), u),
        )
        order.append(v)
        alive ^= 1 << v
    # last removed first: densest core gets the small indices
    order.reverse()
    pos = {v: i for i, v in enumerate(order)}
    radj = [0] * n
    for v in range(n):
        for u in _bit_indices(adj[v]):
            radj[pos[v]] |= 1 << pos[u]

    best = 0

    def expand(size: int, cand: int) -> None:
        nonlocal best
        if cand == 0:
            if size > best:
                best = size
            return
        colour_order: list[tuple[int, int]] = []
        uncoloured = cand
        colour = 0
        while uncoloured:
            colour += 1
            avail = uncoloured
            while avail:
                v = (avail & -avail).bit_length() - 1
                colour_order.append((v, colour))
                avail &= ~radj[v]
                avail &= ~(1 << v)
                uncoloured &= ~(1 << v)
        for v, c in reversed(colour_order):
            if size + c <= best:
                return
            expand(size + 1, cand & radj[v])
            cand &= ~(1 << v)

    expand(0, (1 << n) - 1)
    return best
