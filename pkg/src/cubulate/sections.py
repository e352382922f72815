"""Sections of the wall-to-half-space projection.

A section chooses one side of every wall.  It is admissible when no two
chosen sides are disjoint; admissible sections are the vertices of the
cube complex.  Sections are immutable bit vectors indexed by wall: bit
0 selects the wall's listed side, bit 1 its complement, so the text
encoding of a section is simply its bit string.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import CubulateError, InputError
from .wallspace import WallSpace

__all__ = [
    "Section",
    "InadmissibleFlip",
    "WallEquivalenceClass",
    "principal_section",
    "is_admissible",
    "can_flip",
    "flip",
    "admissible_flips",
    "geodesic_path",
    "wall_equivalence_classes",
]


class InadmissibleFlip(CubulateError):
    """Flipping the requested wall would break admissibility."""


@dataclass(frozen=True)
class Section:
    """One chosen side per wall; bit i is 0 for wall i's listed side."""

    bits: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.bits, tuple):
            object.__setattr__(self, "bits", tuple(self.bits))
        if any(b not in (0, 1) for b in self.bits):
            raise InputError("section bits must be 0 or 1")

    def __len__(self) -> int:
        return len(self.bits)

    def side(self, wall: int) -> int:
        return self.bits[wall]

    def toggle(self, *walls: int) -> "Section":
        """Flip the given sides unconditionally; admissibility is NOT
        checked here (see flip for the checked operation)."""
        b = list(self.bits)
        for w in walls:
            b[w] ^= 1
        return Section(tuple(b))

    def encode(self) -> str:
        return "".join("01"[b] for b in self.bits)

    @classmethod
    def decode(cls, text: str, wall_count: int | None = None) -> "Section":
        if not isinstance(text, str) or any(c not in "01" for c in text):
            raise InputError(f"section encoding must be a 0/1 string, got {text!r}")
        if wall_count is not None and len(text) != wall_count:
            raise InputError(
                f"section encoding has length {len(text)}, expected {wall_count}"
            )
        return cls(tuple(int(c) for c in text))

    def __repr__(self) -> str:
        return f"Section({self.encode()!r})"


def _check_section(space: WallSpace, s: Section) -> None:
    if len(s.bits) != space.wall_count:
        raise InputError(
            f"section has {len(s.bits)} walls, space has {space.wall_count}"
        )


def _chosen_id_mask(s: Section) -> int:
    """Bitmask over half-space ids selected by the section."""
    m = 0
    for i, b in enumerate(s.bits):
        m |= 1 << (2 * i + b)
    return m


def principal_section(space: WallSpace, p: int) -> Section:
    """The section choosing, on every wall, the side containing p."""
    space._check_point(p)
    return Section(
        tuple(space.side_of(w, p) for w in range(space.wall_count))
    )


def is_admissible(space: WallSpace, s: Section) -> bool:
    """True when no two chosen sides are disjoint."""
    _check_section(space, s)
    table = space._disjoint_table
    chosen = _chosen_id_mask(s)
    for i, b in enumerate(s.bits):
        others = chosen & ~(0b11 << (2 * i))
        if table[2 * i + b] & others:
            return False
    return True


def can_flip(space: WallSpace, s: Section, wall: int) -> bool:
    """Whether flipping the wall keeps an admissible section admissible."""
    _check_section(space, s)
    space._check_wall(wall)
    new_id = 2 * wall + (s.bits[wall] ^ 1)
    others = _chosen_id_mask(s) & ~(0b11 << (2 * wall))
    return not space._disjoint_table[new_id] & others


def flip(space: WallSpace, s: Section, wall: int) -> Section:
    """Flip one wall of an admissible section, or reject the move."""
    if not can_flip(space, s, wall):
        raise InadmissibleFlip(
            f"wall {wall}: the flipped side is disjoint from another chosen side"
        )
    return s.toggle(wall)


def admissible_flips(space: WallSpace, s: Section) -> list[int]:
    """All walls that flip admissibly, in ascending id order."""
    _check_section(space, s)
    table = space._disjoint_table
    chosen = _chosen_id_mask(s)
    out = []
    for w, b in enumerate(s.bits):
        others = chosen & ~(0b11 << (2 * w))
        if not table[2 * w + (b ^ 1)] & others:
            out.append(w)
    return out


def geodesic_path(space: WallSpace, p: int, q: int) -> list[Section]:
    """Edge path of sections from the principal section of p to that of q.

    Each step flips one wall still separating p from q whose p-side is
    inclusion-minimal among the remaining ones (lowest wall id on ties),
    so the path length equals the wall distance and every intermediate
    section stays admissible.
    """
    cur = principal_section(space, p)
    path = [cur]
    remaining = space.separating_walls(p, q)
    side_mask = {
        w: space.mask(2 * w + space.side_of(w, p)) for w in remaining
    }
    while remaining:
        minimal = [
            w
            for w in remaining
            if not any(
                x != w and side_mask[x] | side_mask[w] == side_mask[w]
                for x in remaining
            )
        ]
        w0 = min(minimal)
        cur = flip(space, cur, w0)
        path.append(cur)
        remaining.remove(w0)
    return path


@dataclass(frozen=True)
class WallEquivalenceClass:
    representative: int
    members: tuple[int, ...]


def wall_equivalence_classes(space: WallSpace) -> tuple[WallEquivalenceClass, ...]:
    """Partition of the points into zero-wall-distance classes.

    Two points are equivalent when no wall separates them; the classes
    are returned ordered by smallest member, which also serves as the
    representative.  Principal sections are constant on each class and
    distinct across classes.
    """
    groups: dict[tuple[int, ...], list[int]] = {}
    for p in range(space.point_count):
        sig = tuple(space.side_of(w, p) for w in range(space.wall_count))
        groups.setdefault(sig, []).append(p)
    classes = sorted(groups.values(), key=lambda g: g[0])
    return tuple(
        WallEquivalenceClass(representative=g[0], members=tuple(g)) for g in classes
    )
