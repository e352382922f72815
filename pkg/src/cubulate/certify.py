"""Batch certificate checks over a built complex.

Each suite either returns a small summary dict (suitable for JSON
reports) or raises a CertificateError carrying a concrete witness.
Random suites draw from streams derived from a caller-supplied seed so
reports are reproducible.
"""

from __future__ import annotations

import random

from .cubing import CubeComplex, check_flag
from .errors import CertificateError
from .homotopy import contract_loop, loop_parity_check, random_loop, replay_certificate
from .sections import principal_section
from .wallspace import WallSpace

__all__ = [
    "MetricMismatch",
    "ParityViolation",
    "ReplayMismatch",
    "check_metric_correspondence",
    "parity_suite",
    "contraction_suite",
    "flag_suite",
]


class MetricMismatch(CertificateError):
    """Wall pseudo-distance disagrees with edge-path distance."""


class ParityViolation(CertificateError):
    """A closed loop with odd length or an odd per-wall flip count."""


class ReplayMismatch(CertificateError):
    """Replaying a contraction certificate did not end at the basepoint."""


def check_metric_correspondence(space: WallSpace, X: CubeComplex) -> dict:
    """Compare d(p, q) with the edge-path distance between the principal
    vertices of p and q, for every pair of points.

    Pairs of wall-equivalent points share a principal vertex, so one BFS
    per distinct principal vertex covers all pairs.
    """
    vertex_of = [X.index_of(principal_section(space, p)) for p in space.points()]
    rows: dict[int, list[int]] = {}
    for vi in sorted(set(vertex_of)):
        rows[vi] = X.distances_from_index(vi)
    pairs = 0
    for p in space.points():
        for q in range(p + 1, space.point_count):
            expected = space.wall_distance(p, q)
            actual = rows[vertex_of[p]][vertex_of[q]]
            if actual != expected:
                raise MetricMismatch(
                    f"points {p} and {q} are separated by {expected} walls but "
                    f"their principal vertices are {actual} edges apart"
                )
            pairs += 1
    return {
        "points": space.point_count,
        "pairs": pairs,
        "principal_vertices": len(rows),
    }


def parity_suite(X: CubeComplex, seed: int, runs: int = 100) -> dict:
    """Check even length and even per-wall flip counts on seeded random
    closed loops."""
    rng = random.Random(f"{seed}:parity")
    total_edges = 0
    longest = 0
    for n in range(runs):
        loop = random_loop(X, rng)
        if not loop_parity_check(loop):
            raise ParityViolation(
                f"loop {n} of seed {seed} fails the parity check: "
                f"vertices {list(loop.indices)}"
            )
        total_edges += loop.edge_length
        longest = max(longest, loop.edge_length)
    return {
        "seed": seed,
        "loops": runs,
        "total_edges": total_edges,
        "longest": longest,
    }


def contraction_suite(X: CubeComplex, seed: int, runs: int = 100) -> dict:
    """Contract seeded random loops and replay every emitted certificate."""
    rng = random.Random(f"{seed}:contract")
    square_moves = 0
    backtrack_moves = 0
    longest = 0
    for n in range(runs):
        loop = random_loop(X, rng)
        cert = contract_loop(loop)
        final = replay_certificate(X, cert.initial, cert.moves)
        if final != [cert.base]:
            raise ReplayMismatch(
                f"loop {n} of seed {seed}: certificate replay left "
                f"{len(final) - 1} edges standing"
            )
        square_moves += cert.square_moves
        backtrack_moves += cert.backtrack_moves
        longest = max(longest, loop.edge_length)
    return {
        "seed": seed,
        "loops": runs,
        "square_moves": square_moves,
        "backtrack_moves": backtrack_moves,
        "longest": longest,
    }


def flag_suite(X: CubeComplex) -> dict:
    """Run the flag-link check; returns counts on success."""
    check_flag(X)
    return {
        "vertices": len(X.vertices),
        "squares": len(X.cubes.get(2, {})),
    }
