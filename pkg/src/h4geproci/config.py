"""The 60-point configuration in P^3, its dual planes, and all incidences.

Coordinates live in Z[phi] with phi the golden ratio; phi^2 is expanded as
1 + phi on the {1, phi} basis.  Plane i is dual to point i: for
P_i = [a:b:c:d] the plane is {ax + by + cz + dw = 0}.  The configuration is a
symmetric (60_15) point-plane structure carrying 72 lines with exactly five
configuration points each, and no line carries six.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

from .field import ONE, PHI, PHI2, ZERO
from .projective import (ProjLine, ProjPoint, ProjPlane, canonicalize,
                         line_through, point_on_line)

# Coordinate tokens: 0, 1, -1, f = phi, F = phi^2, with sign prefixes.
_TOKENS = {
    "0": ZERO, "1": ONE, "-1": -ONE,
    "f": PHI, "-f": -PHI, "F": PHI2, "-F": -PHI2,
}

_POINT_DATA = """
1 0 0 0    | 0 1 0 0    | 0 0 1 0    | 0 0 0 1
1 1 1 1    | 1 1 1 -1   | 1 1 -1 1   | 1 1 -1 -1
1 -1 1 1   | 1 -1 1 -1  | 1 -1 -1 1  | 1 -1 -1 -1
0 f F 1    | 0 f F -1   | 0 f -F 1   | 0 f -F -1
0 F 1 f    | 0 F 1 -f   | 0 F -1 f   | 0 F -1 -f
0 1 f F    | 0 1 f -F   | 0 1 -f F   | 0 1 -f -F
f 0 1 F    | f 0 1 -F   | f 0 -1 F   | f 0 -1 -F
F 0 f 1    | F 0 f -1   | F 0 -f 1   | F 0 -f -1
1 0 F f    | 1 0 F -f   | 1 0 -F f   | 1 0 -F -f
f F 0 1    | f F 0 -1   | f -F 0 1   | f -F 0 -1
F 1 0 f    | F 1 0 -f   | F -1 0 f   | F -1 0 -f
1 f 0 F    | 1 f 0 -F   | 1 -f 0 F   | 1 -f 0 -F
f 1 F 0    | f 1 -F 0   | f -1 F 0   | f -1 -F 0
F f 1 0    | F f -1 0   | F -f 1 0   | F -f -1 0
1 F f 0    | 1 F -f 0   | 1 -F f 0   | 1 -F -f 0
"""


def _parse_points() -> List[ProjPoint]:
    pts = []
    for chunk in _POINT_DATA.replace("\n", "|").split("|"):
        tokens = chunk.split()
        if not tokens:
            continue
        assert len(tokens) == 4, tokens
        pts.append(ProjPoint([_TOKENS[t] for t in tokens]))
    assert len(pts) == 60
    return pts


class PointSet(FrozenSet[int]):
    """A set of configuration point indices (1..60)."""

    def sorted(self) -> Tuple[int, ...]:
        return tuple(sorted(self))


@dataclass(frozen=True)
class H4Configuration:
    """The full configuration: flats indexed 1-based, plus incidence maps."""

    points: Dict[int, ProjPoint]
    planes: Dict[int, ProjPlane]
    lines: Dict[int, ProjLine]
    line_points: Dict[int, Tuple[int, ...]]
    plane_points: Dict[int, Tuple[int, ...]]
    point_planes: Dict[int, Tuple[int, ...]]
    point_lines: Dict[int, Tuple[int, ...]]
    line_planes: Dict[int, Tuple[int, ...]]
    plane_lines: Dict[int, Tuple[int, ...]]

    def max_collinear(self) -> int:
        return max(len(s) for s in self.line_points.values())

    def to_json(self) -> dict:
        return {
            "points": {str(i): p.to_json() for i, p in self.points.items()},
            "planes": {str(i): v.to_json() for i, v in self.planes.items()},
            "lines": {str(i): l.to_json() for i, l in self.lines.items()},
            "line_points": {str(i): list(s) for i, s in self.line_points.items()},
            "plane_points": {str(i): list(s) for i, s in self.plane_points.items()},
            "point_planes": {str(i): list(s) for i, s in self.point_planes.items()},
            "point_lines": {str(i): list(s) for i, s in self.point_lines.items()},
            "line_planes": {str(i): list(s) for i, s in self.line_planes.items()},
            "plane_lines": {str(i): list(s) for i, s in self.plane_lines.items()},
        }


def collinear_groups(points: Sequence[ProjPoint]) -> Dict[Tuple, List[int]]:
    """Group 0-based point indices by the line they span (pair scan).

    Keys are canonical Pluecker tuples; each value lists every input point on
    that line, so maximal collinear subsets fall out directly.
    """
    groups: Dict[Tuple, set] = {}
    n = len(points)
    for i in range(n):
        pi = points[i].coords
        for j in range(i + 1, n):
            pj = points[j].coords
            pl = canonicalize([pi[a] * pj[b] - pi[b] * pj[a]
                               for (a, b) in ((0, 1), (0, 2), (0, 3),
                                              (1, 2), (1, 3), (2, 3))])
            groups.setdefault(pl, set()).update((i, j))
    return {k: sorted(v) for k, v in groups.items()}


def max_collinear(points: Sequence[ProjPoint]) -> int:
    """Largest number of collinear points among the given points."""
    if len(points) < 2:
        return len(points)
    return max(len(v) for v in collinear_groups(points).values())


def build_h4() -> H4Configuration:
    """Construct the configuration and populate every incidence map.

    Aborts with an AssertionError diagnostic if any structural count fails;
    the construction itself is infallible.
    """
    pts = _parse_points()
    points = {i + 1: p for i, p in enumerate(pts)}
    assert len(set(points.values())) == 60, "points are not pairwise distinct"
    planes = {i: ProjPlane(points[i].coords) for i in points}

    plane_points = {
        i: tuple(j for j in points if planes[i].contains(points[j]))
        for i in planes
    }
    for i, row in plane_points.items():
        assert len(row) == 15, f"plane {i} contains {len(row)} points, not 15"
    point_planes = {
        j: tuple(i for i in planes if j in plane_points[i]) for j in points
    }
    for j, row in point_planes.items():
        assert len(row) == 15, f"point {j} lies on {len(row)} planes, not 15"

    # Five-reach lines: the maximal collinear subsets of size 5, indexed by
    # lexicographic order of their sorted point-index sets.
    groups = collinear_groups(pts)
    sizes = sorted({len(v) for v in groups.values()})
    assert max(sizes) == 5, f"a line carries {max(sizes)} points; expected max 5"
    five_sets = sorted(tuple(i + 1 for i in v)
                       for v in groups.values() if len(v) == 5)
    assert len(five_sets) == 72, f"{len(five_sets)} five-point lines, not 72"

    lines = {}
    line_points = {}
    for idx, members in enumerate(five_sets, start=1):
        lines[idx] = line_through(points[members[0]], points[members[1]])
        line_points[idx] = members

    point_lines = {
        j: tuple(i for i in lines if j in line_points[i]) for j in points
    }
    for j, row in point_lines.items():
        assert len(row) == 6, f"point {j} lies on {len(row)} lines, not 6"
    line_planes = {
        i: tuple(v for v in planes if _line_in_plane(lines[i], planes[v]))
        for i in lines
    }
    for i, row in line_planes.items():
        assert len(row) == 5, f"line {i} lies in {len(row)} planes, not 5"
    plane_lines = {
        v: tuple(i for i in lines if v in line_planes[i]) for v in planes
    }
    for v, row in plane_lines.items():
        assert len(row) == 6, f"plane {v} contains {len(row)} lines, not 6"

    return H4Configuration(points, planes, lines, line_points, plane_points,
                           point_planes, point_lines, line_planes, plane_lines)


def _line_in_plane(line: ProjLine, plane: ProjPlane) -> bool:
    return plane.contains(line.p) and plane.contains(line.q)


def incidence_table_planes(cfg: H4Configuration) -> Dict[int, Tuple[int, ...]]:
    """Plane index -> the 15 point indices it contains."""
    return dict(cfg.plane_points)


def incidence_table_lines(cfg: H4Configuration) -> Dict[int, Tuple[int, ...]]:
    """Line index -> the 5 point indices it carries."""
    return dict(cfg.line_points)


def special_points_for_grid(
    cfg: H4Configuration, grid_points: Iterable[int]
) -> List[Tuple[int, Tuple[Tuple[int, int], ...]]]:
    """Points outside a 25-point grid whose secants pair up the grid.

    For each configuration point X outside the grid, collect all pairs {A, B}
    of grid points collinear with X.  Returns the points with exactly 10 such
    pairs covering 20 distinct grid points, together with their pairings.
    """
    grid = sorted(set(grid_points))
    assert len(grid) == 25, "expected a 25-point grid"
    out = []
    for x in sorted(cfg.points):
        if x in grid:
            continue
        px = cfg.points[x]
        pairs = []
        for ai in range(len(grid)):
            a = cfg.points[grid[ai]]
            if a == px:
                continue
            ln = line_through(px, a)
            for bi in range(ai + 1, len(grid)):
                if point_on_line(cfg.points[grid[bi]], ln):
                    pairs.append((grid[ai], grid[bi]))
        covered = {i for pair in pairs for i in pair}
        if len(pairs) == 10 and len(covered) == 20:
            out.append((x, tuple(sorted(pairs))))
    return out


# The two (5,5)-grids and their external lines, by line index.
GRID1_L = (1, 25, 32, 37, 44)
GRID1_M = (2, 26, 31, 38, 43)
GRID1_EXTERNAL_LINE = 24
GRID2_L = (7, 51, 60, 65, 70)
GRID2_M = (8, 54, 58, 63, 71)
GRID2_EXTERNAL_LINE = 17


def grid_point_indices(cfg: H4Configuration, line_indices: Iterable[int]) -> Tuple[int, ...]:
    """Union of the configuration points on the given lines, sorted."""
    s: set = set()
    for i in line_indices:
        s.update(cfg.line_points[i])
    return tuple(sorted(s))


def z_partition(cfg: H4Configuration) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """The half/half split: grid 1 plus its external line, and the rest."""
    z1 = set(grid_point_indices(cfg, GRID1_L))
    z1.update(cfg.line_points[GRID1_EXTERNAL_LINE])
    z2 = set(cfg.points) - z1
    return tuple(sorted(z1)), tuple(sorted(z2))


def format_plane_table(table: Dict[int, Tuple[int, ...]]) -> str:
    return "\n".join(f"V_{i}: " + ", ".join(map(str, table[i]))
                     for i in sorted(table))


def format_line_table(table: Dict[int, Tuple[int, ...]]) -> str:
    return "\n".join(f"l_{i}: " + ",".join(map(str, table[i]))
                     for i in sorted(table))
