"""Loops in the 1-skeleton and their contraction certificates.

Every closed edge path has even length and flips every wall an even
number of times; loop_parity_check verifies both mechanically.
contract_loop shrinks a loop to its basepoint by sweeping the vertices
furthest from the basepoint: each such vertex, its two loop neighbours
sitting one step closer, is pushed across the square spanned by the two
(necessarily crossing) walls, and spurs are removed eagerly.  The moves
are recorded as a replayable certificate and the maximal distance to
the basepoint strictly decreases with every sweep.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .cubing import CubeComplex, NotInComponent
from .errors import CertificateError, InputError
from .sections import Section

__all__ = [
    "EdgeLoop",
    "Move",
    "ContractionCertificate",
    "NotALoop",
    "ContractionStuck",
    "loop_parity_check",
    "remove_backtracks",
    "contract_loop",
    "replay_certificate",
    "random_loop",
]


class NotALoop(InputError):
    """The vertex sequence is not a closed edge path."""


class ContractionStuck(CertificateError):
    """The contraction sweep could not make progress; carries diagnostics."""


class EdgeLoop:
    """A closed edge path v_0, ..., v_L = v_0, stored as vertex indices.

    Vertices may be given as Section objects or indices; consecutive
    entries must be joined by an edge of the complex.
    """

    def __init__(self, complex: CubeComplex, vertices: Sequence["Section | int"]):
        if not vertices:
            raise NotALoop("a loop needs at least its basepoint")
        try:
            idxs = [complex.index_of(v) for v in vertices]
        except NotInComponent as exc:
            raise NotALoop(str(exc)) from exc
        if idxs[0] != idxs[-1]:
            raise NotALoop("the path does not return to its start")
        for a, b in zip(idxs, idxs[1:]):
            if b not in complex.adjacency[a].values():
                raise NotALoop(f"vertices {a} and {b} are not adjacent")
        self.complex = complex
        self.indices: tuple[int, ...] = tuple(idxs)

    @property
    def edge_length(self) -> int:
        return len(self.indices) - 1

    @property
    def is_trivial(self) -> bool:
        return self.edge_length == 0

    def wall_labels(self) -> tuple[int, ...]:
        """The wall flipped by each edge, in path order."""
        X = self.complex
        return tuple(
            X.edge_wall(a, b) for a, b in zip(self.indices, self.indices[1:])
        )

    def sections(self) -> tuple[Section, ...]:
        return tuple(self.complex.vertices[i] for i in self.indices)

    def __repr__(self) -> str:
        return f"EdgeLoop(length={self.edge_length})"


def loop_parity_check(loop: EdgeLoop) -> bool:
    """True when the loop has even length and flips every wall an even
    number of times."""
    counts: dict[int, int] = {}
    for w in loop.wall_labels():
        counts[w] = counts.get(w, 0) + 1
    return loop.edge_length % 2 == 0 and all(c % 2 == 0 for c in counts.values())


@dataclass(frozen=True)
class Move:
    """One certificate step: a spur removal or a push across a square.

    ``at`` is the position in the loop at the time the move applies; for
    a backtrack the entries at positions at and at+1 are removed, for a
    square move the vertex at position at is replaced by its opposite
    corner across the two walls.
    """

    kind: str
    at: int
    walls: tuple[int, ...]

    def to_dict(self) -> dict:
        return {"type": self.kind, "at": self.at, "walls": list(self.walls)}


@dataclass(frozen=True)
class ContractionCertificate:
    base: int
    initial: tuple[int, ...]
    moves: tuple[Move, ...]

    @property
    def square_moves(self) -> int:
        return sum(1 for m in self.moves if m.kind == "square")

    @property
    def backtrack_moves(self) -> int:
        return sum(1 for m in self.moves if m.kind == "backtrack")

    def to_json_obj(self) -> list[dict]:
        return [m.to_dict() for m in self.moves]


def _strip_backtracks(
    seq: list[int], X: CubeComplex, moves: list[Move] | None
) -> list[int]:
    """Delete (v, w, v) spurs until none remain, recording the removals."""
    i = 1
    while i < len(seq) - 1:
        if seq[i - 1] == seq[i + 1]:
            if moves is not None:
                w = X.edge_wall(seq[i - 1], seq[i])
                moves.append(Move("backtrack", i, (w,)))
            del seq[i : i + 2]
            i = max(i - 1, 1)
        else:
            i += 1
    return seq


def remove_backtracks(loop: EdgeLoop) -> EdgeLoop:
    """The loop with all immediate backtracks removed."""
    seq = _strip_backtracks(list(loop.indices), loop.complex, None)
    return EdgeLoop(loop.complex, seq)


def contract_loop(loop: EdgeLoop) -> ContractionCertificate:
    """Contract a loop to its basepoint, emitting a replayable certificate.

    Sweeps the loop's furthermost vertices (ties broken by lowest
    position): each has both neighbours exactly one step closer to the
    basepoint and reached across crossing walls, so it is replaced by
    the opposite corner of the registered square, two steps closer.
    Spurs are removed eagerly after every replacement.  The loop radius
    must strictly decrease with each sweep; any failure of these
    guarantees raises ContractionStuck.
    """
    X = loop.complex
    base = loop.indices[0]
    dist = X.distances_from_index(base)
    moves: list[Move] = []
    seq = _strip_backtracks(list(loop.indices), X, moves)
    while len(seq) > 1:
        radius = max(dist[v] for v in seq)
        while True:
            pos = next(
                (i for i in range(1, len(seq) - 1) if dist[seq[i]] == radius), None
            )
            if pos is None:
                break
            sigma = seq[pos]
            a, b = seq[pos - 1], seq[pos + 1]
            if a == b:
                raise ContractionStuck(
                    f"backtrack at position {pos} survived spur removal"
                )
            if dist[a] != radius - 1 or dist[b] != radius - 1:
                raise ContractionStuck(
                    f"neighbours of furthermost vertex {sigma} sit at distances "
                    f"{dist[a]} and {dist[b]}, expected {radius - 1}"
                )
            wa = X.edge_wall(sigma, a)
            wb = X.edge_wall(sigma, b)
            if not X.space.crosses(wa, wb):
                raise ContractionStuck(
                    f"walls {wa} and {wb} at vertex {sigma} do not cross"
                )
            walls = (min(wa, wb), max(wa, wb))
            tau_section = X.vertices[sigma].toggle(*walls)
            tau = X.find(tau_section)
            if tau is None:
                raise ContractionStuck(
                    f"opposite corner {tau_section.encode()} is not a vertex"
                )
            s = X.vertices[sigma]
            ones = [w for w in walls if s.bits[w] == 1]
            key_base = X.find(s.toggle(*ones) if ones else s)
            if key_base is None or (key_base, walls) not in X.cubes.get(2, {}):
                raise ContractionStuck(
                    f"square over walls {list(walls)} at vertex {sigma} is not registered"
                )
            if dist[tau] != radius - 2:
                raise ContractionStuck(
                    f"opposite corner {tau} sits at distance {dist[tau]}, "
                    f"expected {radius - 2}"
                )
            seq[pos] = tau
            moves.append(Move("square", pos, walls))
            seq = _strip_backtracks(seq, X, moves)
            if len(seq) == 1:
                break
        if len(seq) > 1:
            new_radius = max(dist[v] for v in seq)
            if new_radius >= radius:
                raise ContractionStuck(
                    f"loop radius did not decrease: {radius} -> {new_radius}"
                )
    return ContractionCertificate(
        base=base, initial=tuple(loop.indices), moves=tuple(moves)
    )


def replay_certificate(
    X: CubeComplex, initial: Sequence["Section | int"], moves: Sequence[Move]
) -> list[int]:
    """Apply a recorded move sequence to the initial loop, verifying each
    move, and return the final vertex index sequence."""
    seq = list(EdgeLoop(X, initial).indices)
    for n, mv in enumerate(moves):
        i = mv.at
        if not 1 <= i < len(seq) - 1:
            raise CertificateError(f"move {n}: position {i} out of range")
        if mv.kind == "backtrack":
            if len(mv.walls) != 1:
                raise CertificateError(f"move {n}: backtrack needs one wall")
            if seq[i - 1] != seq[i + 1]:
                raise CertificateError(f"move {n}: no spur at position {i}")
            if X.edge_wall(seq[i - 1], seq[i]) != mv.walls[0]:
                raise CertificateError(f"move {n}: wall does not match the spur")
            del seq[i : i + 2]
        elif mv.kind == "square":
            if len(mv.walls) != 2:
                raise CertificateError(f"move {n}: square needs two walls")
            w1, w2 = mv.walls
            target = X.vertices[seq[i]].toggle(w1, w2)
            ti = X.find(target)
            if ti is None:
                raise CertificateError(
                    f"move {n}: opposite corner {target.encode()} is not a vertex"
                )
            if (
                ti not in X.adjacency[seq[i - 1]].values()
                or ti not in X.adjacency[seq[i + 1]].values()
            ):
                raise CertificateError(
                    f"move {n}: replacement vertex breaks the loop at position {i}"
                )
            seq[i] = ti
        else:
            raise CertificateError(f"move {n}: unknown move type {mv.kind!r}")
    return seq


def random_loop(
    X: CubeComplex, rng: random.Random, steps: int | None = None
) -> EdgeLoop:
    """A seeded random closed loop at the complex base: a random walk
    followed by the BFS-tree geodesic back to the start."""
    if steps is None:
        steps = rng.randrange(2, 17)
    start = X.index_of(X.base)
    walk = [start]
    for _ in range(steps):
        nbrs = [v for _, v in X.neighbors(walk[-1])]
        walk.append(rng.choice(nbrs))
    _, parent = X.bfs_tree(start)
    v = walk[-1]
    while v != start:
        v = parent[v]
        walk.append(v)
    return EdgeLoop(X, walk)
