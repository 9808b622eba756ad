"""Verification pipeline: generic projection, grid and quadric certificates,
the degree-5 cone pencil, complete-intersection certificates, and the
not-half-grid refutation.

Every check is exact.  A passing certificate is machine-checkable evidence:
it embeds the forms, the dimension table and the per-condition checklist, and
an independent checker can re-verify each claim by evaluation.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from . import config as cfgmod
from .config import H4Configuration
from .field import FieldElement, ONE, ZERO
from .forms import (HomForm, SmoothnessReport, divides, plane_curve_is_smooth,
                    vanishing_space)
from .linalg import inverse, transpose
from .projective import (ProjMatrix, ProjPoint, canonicalize,
                         intersection_point, lines_meet, plane_through)

PlaneCoords = Tuple[FieldElement, FieldElement, FieldElement]


class VerificationError(RuntimeError):
    """A structured verification failure; the message names the condition."""


class NotAGridError(VerificationError):
    pass


class PencilDegenerateError(VerificationError):
    pass


class RejectionBudgetExhausted(VerificationError):
    pass


@dataclass(frozen=True)
class Projection:
    """A projection of P^3 from a verified-generic vertex onto P^2."""

    vertex: ProjPoint
    matrix: ProjMatrix  # sends the vertex to [0:0:0:1]
    images: Dict[int, PlaneCoords]  # configuration point index -> image
    checklist: Dict[str, bool]

    def image_of(self, p: ProjPoint) -> PlaneCoords:
        moved = self.matrix.apply_point(p)
        return canonicalize(moved.coords[:3])

    def push_plane_through_vertex(self, members: Sequence) -> HomForm:
        """Image of a plane through the vertex, as a linear form on P^2."""
        plane = plane_through(*members, self.vertex)
        moved = self.matrix.apply_plane(plane)
        if not moved.coords[3].is_zero():
            raise VerificationError("plane does not pass through the vertex")
        return HomForm.linear(list(moved.coords[:3]))


def configuration_quadrics(cfg: H4Configuration) -> Tuple[HomForm, HomForm]:
    """The two grid quadrics, interpolated from the 25-point grids."""
    out = []
    for lines in (cfgmod.GRID1_L, cfgmod.GRID2_L):
        pts = [cfg.points[i].coords
               for i in cfgmod.grid_point_indices(cfg, lines)]
        basis = vanishing_space(pts, 2, 4)
        if len(basis) != 1:
            raise VerificationError("grid quadric is not unique")
        out.append(basis[0])
    return out[0], out[1]


def sample_generic_vertex(cfg: H4Configuration, seed: int,
                          budget: int = 1000) -> Projection:
    """Draw a deterministic vertex and certify its genericity.

    Coordinates are drawn uniformly from [-100, 100]; a draw is rejected if
    the vertex lies on any configuration plane, any 5-reach line, either grid
    quadric, or if two configuration points project to the same image.
    """
    rng = random.Random(seed)
    q1, q2 = configuration_quadrics(cfg)
    for _ in range(budget):
        raw = [rng.randint(-100, 100) for _ in range(4)]
        if all(v == 0 for v in raw):
            continue
        vertex = ProjPoint.of(*raw)
        checklist = {}
        checklist["off_all_planes"] = all(
            not cfg.planes[i].contains(vertex) for i in cfg.planes)
        checklist["off_all_lines"] = all(
            not cfg.lines[i].contains(vertex) for i in cfg.lines)
        checklist["off_quadric_q1"] = not q1.vanishes_at(vertex.coords)
        checklist["off_quadric_q2"] = not q2.vanishes_at(vertex.coords)
        if not all(checklist.values()):
            continue
        matrix = _vertex_to_origin(vertex)
        images = {i: canonicalize(matrix.apply_point(cfg.points[i]).coords[:3])
                  for i in cfg.points}
        checklist["images_distinct"] = len(set(images.values())) == 60
        if checklist["images_distinct"]:
            return Projection(vertex, matrix, images, checklist)
    raise RejectionBudgetExhausted(f"no generic vertex in {budget} draws")


def _vertex_to_origin(vertex: ProjPoint) -> ProjMatrix:
    """An invertible change of coordinates sending the vertex to [0:0:0:1]."""
    pivot = next(i for i in range(4) if not vertex.coords[i].is_zero())
    cols = [[ONE if r == i else ZERO for r in range(4)]
            for i in range(4) if i != pivot]
    cols.append(list(vertex.coords))
    n = transpose(cols)
    return ProjMatrix(inverse(n))


@dataclass(frozen=True)
class GridCertificate:
    """Evidence that two 5-line families form a (5,5)-grid on a quadric."""

    l_lines: Tuple[int, ...]
    m_lines: Tuple[int, ...]
    grid_points: Tuple[int, ...]  # 25 configuration point indices
    quadric: HomForm

    def to_json(self) -> dict:
        return {
            "l_lines": list(self.l_lines),
            "m_lines": list(self.m_lines),
            "grid_points": list(self.grid_points),
            "quadric": self.quadric.to_json(),
        }


def verify_grid(cfg: H4Configuration, l_lines: Sequence[int],
                m_lines: Sequence[int]) -> GridCertificate:
    """Check the grid conditions and interpolate the unique quadric."""
    l_lines, m_lines = tuple(l_lines), tuple(m_lines)
    if len(set(l_lines)) != 5 or len(set(m_lines)) != 5:
        raise NotAGridError("each family needs 5 distinct lines")
    if set(l_lines) & set(m_lines):
        raise NotAGridError("families share a line")
    for fam_name, fam in (("L", l_lines), ("M", m_lines)):
        for i in range(5):
            for j in range(i + 1, 5):
                if lines_meet(cfg.lines[fam[i]], cfg.lines[fam[j]]):
                    raise NotAGridError(
                        f"{fam_name}-lines {fam[i]} and {fam[j]} are not skew")
    point_lookup = {p: i for i, p in cfg.points.items()}
    grid_points = set()
    for li in l_lines:
        for mj in m_lines:
            if not lines_meet(cfg.lines[li], cfg.lines[mj]):
                raise NotAGridError(f"lines {li} and {mj} do not meet")
            pt = intersection_point(cfg.lines[li], cfg.lines[mj])
            idx = point_lookup.get(pt)
            if idx is None:
                raise NotAGridError(
                    f"lines {li} and {mj} meet outside the configuration")
            grid_points.add(idx)
    if len(grid_points) != 25:
        raise NotAGridError(f"{len(grid_points)} intersection points, not 25")
    basis = vanishing_space([cfg.points[i].coords for i in sorted(grid_points)],
                            2, 4)
    if len(basis) != 1:
        raise NotAGridError(f"quadric space has dimension {len(basis)}, not 1")
    return GridCertificate(l_lines, m_lines, tuple(sorted(grid_points)),
                           basis[0])


def build_quintic_cone(cfg: H4Configuration, proj: Projection,
                       grid: GridCertificate, anchor: int,
                       external_line: int) -> HomForm:
    """The member of the grid's degree-5 pencil vanishing at the anchor image.

    The pencil is generated by the two products of five planes, each plane
    spanned by a grid line and the vertex, pushed down to degree-5 forms on
    P^2.  The returned form is checked to vanish at the 25 grid images, the
    anchor, and every other configuration point on the external line.
    """
    if anchor not in cfg.line_points[external_line]:
        raise VerificationError("anchor does not lie on the external line")
    g = _product_of_line_images(cfg, proj, grid.l_lines)
    h = _product_of_line_images(cfg, proj, grid.m_lines)
    a = proj.images[anchor]
    ga, ha = g.evaluate(a), h.evaluate(a)
    if ga.is_zero() and ha.is_zero():
        raise PencilDegenerateError(
            "both pencil generators vanish at the anchor image; resample")
    quintic = (g.scale(ha) - h.scale(ga)).monic()
    for i in grid.grid_points:
        if not quintic.vanishes_at(proj.images[i]):
            raise VerificationError(f"pencil member misses grid point {i}")
    for i in cfg.line_points[external_line]:
        if not quintic.vanishes_at(proj.images[i]):
            raise VerificationError(
                f"pencil member misses external-line point {i}")
    return quintic


def _product_of_line_images(cfg: H4Configuration, proj: Projection,
                            line_indices: Sequence[int]) -> HomForm:
    result = HomForm(3, 0, {(0, 0, 0): ONE})
    for i in line_indices:
        result = result * proj.push_plane_through_vertex([cfg.lines[i]])
    return result


def pencil_base_points(cfg: H4Configuration, proj: Projection,
                       grid: GridCertificate) -> Tuple[int, ...]:
    """Configuration points whose images kill both pencil generators."""
    g = _product_of_line_images(cfg, proj, grid.l_lines)
    h = _product_of_line_images(cfg, proj, grid.m_lines)
    return tuple(sorted(i for i in cfg.points
                        if g.vanishes_at(proj.images[i])
                        and h.vanishes_at(proj.images[i])))


@dataclass(frozen=True)
class GeprociCertificate:
    """Evidence that the projected 60 points are a (6,10) complete intersection."""

    seed: int
    vertex: ProjPoint
    dimension_table: Tuple[int, ...]  # dim of degree-d vanishing space, d=1..6
    sextic: HomForm
    sextic_smooth: SmoothnessReport
    grid1: GridCertificate
    grid2: GridCertificate
    quintic1: HomForm
    quintic2: HomForm
    z1: Tuple[int, ...]
    z2: Tuple[int, ...]
    sextic_divides_decic: bool
    checks: Dict[str, bool]

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> dict:
        return {
            "seed": self.seed,
            "vertex": self.vertex.to_json(),
            "dimension_table": list(self.dimension_table),
            "sextic": self.sextic.to_json(),
            "sextic_smooth": {
                "smooth": self.sextic_smooth.smooth,
                "reason": self.sextic_smooth.reason,
                "chart_trail": list(self.sextic_smooth.chart_trail),
            },
            "grid1": self.grid1.to_json(),
            "grid2": self.grid2.to_json(),
            "quintic1": self.quintic1.to_json(),
            "quintic2": self.quintic2.to_json(),
            "z1": list(self.z1),
            "z2": list(self.z2),
            "sextic_divides_decic": self.sextic_divides_decic,
            "checks": dict(self.checks),
            "passed": self.passed,
        }


def verify_geproci(cfg: H4Configuration, seed: int) -> GeprociCertificate:
    """Full pipeline for the complete-intersection certificate at one seed."""
    proj = sample_generic_vertex(cfg, seed)
    images = [proj.images[i] for i in sorted(cfg.points)]
    dims = []
    sextic = None
    for d in range(1, 7):
        basis = vanishing_space(images, d, 3)
        dims.append(len(basis))
        if d == 6 and len(basis) == 1:
            sextic = basis[0]
    checks: Dict[str, bool] = {}
    checks["dimension_table"] = tuple(dims) == (0, 0, 0, 0, 0, 1)
    if sextic is None:
        raise VerificationError(f"degree-6 space has dimension {dims[-1]}, not 1")
    smooth = plane_curve_is_smooth(sextic, seed=seed)
    checks["sextic_smooth"] = smooth.smooth

    grid1 = verify_grid(cfg, cfgmod.GRID1_L, cfgmod.GRID1_M)
    grid2 = verify_grid(cfg, cfgmod.GRID2_L, cfgmod.GRID2_M)
    z1, z2 = cfgmod.z_partition(cfg)
    anchor1 = _anchor_on(cfg, grid1, cfgmod.GRID1_EXTERNAL_LINE)
    anchor2 = _anchor_on(cfg, grid2, cfgmod.GRID2_EXTERNAL_LINE)
    quintic1 = build_quintic_cone(cfg, proj, grid1, anchor1,
                                  cfgmod.GRID1_EXTERNAL_LINE)
    quintic2 = build_quintic_cone(cfg, proj, grid2, anchor2,
                                  cfgmod.GRID2_EXTERNAL_LINE)
    checks["quintic1_on_z1"] = all(quintic1.vanishes_at(proj.images[i])
                                   for i in z1)
    checks["quintic2_on_z2"] = all(quintic2.vanishes_at(proj.images[i])
                                   for i in z2)
    decic = quintic1 * quintic2
    checks["decic_on_all"] = all(decic.vanishes_at(proj.images[i])
                                 for i in cfg.points)
    no_shared = not divides(sextic, decic)
    checks["no_shared_component"] = no_shared
    checks["bezout_count"] = sextic.degree * decic.degree == 60
    cert = GeprociCertificate(seed, proj.vertex, tuple(dims), sextic, smooth,
                              grid1, grid2, quintic1, quintic2, z1, z2,
                              not no_shared, checks)
    if not cert.passed:
        failed = [k for k, v in checks.items() if not v]
        raise VerificationError(f"geproci certificate failed: {failed}")
    return cert


_SPECIALS_CACHE: Dict[Tuple[int, ...], List[Tuple[int, Tuple]]] = {}


def _anchor_on(cfg: H4Configuration, grid: GridCertificate,
               external_line: int) -> int:
    specials = _SPECIALS_CACHE.get(grid.grid_points)
    if specials is None:
        specials = cfgmod.special_points_for_grid(cfg, grid.grid_points)
        _SPECIALS_CACHE[grid.grid_points] = specials
    on_line = [x for x, _ in specials
               if x in cfg.line_points[external_line]]
    if len(on_line) != 5:
        raise VerificationError(
            f"external line {external_line} does not carry 5 special points")
    return min(on_line)


# Covering line sets for the two halves (pairwise skew; each covers 30 points).
Z1_COVER_LINES = (1, 24, 25, 32, 37, 44)
Z2_COVER_LINES = (7, 17, 51, 60, 65, 70)


@dataclass(frozen=True)
class HalfGridCertificate:
    """Evidence that one half of the configuration is a (6,5) half-grid."""

    subset_name: str
    seed: int
    vertex: ProjPoint
    subset: Tuple[int, ...]
    cover_lines: Tuple[int, ...]
    quintic: HomForm
    line_product: HomForm
    checks: Dict[str, bool]

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> dict:
        return {
            "subset": self.subset_name,
            "seed": self.seed,
            "vertex": self.vertex.to_json(),
            "points": list(self.subset),
            "cover_lines": list(self.cover_lines),
            "quintic": self.quintic.to_json(),
            "line_product": self.line_product.to_json(),
            "checks": dict(self.checks),
            "passed": self.passed,
        }


def verify_half_grid(cfg: H4Configuration, seed: int,
                     subset: str) -> HalfGridCertificate:
    """Certify that Z1 or Z2 projects to a (5,6) complete intersection."""
    z1, z2 = cfgmod.z_partition(cfg)
    if subset == "z1":
        points, cover = z1, Z1_COVER_LINES
        grid_l, grid_m, ext = (cfgmod.GRID1_L, cfgmod.GRID1_M,
                               cfgmod.GRID1_EXTERNAL_LINE)
    elif subset == "z2":
        points, cover = z2, Z2_COVER_LINES
        grid_l, grid_m, ext = (cfgmod.GRID2_L, cfgmod.GRID2_M,
                               cfgmod.GRID2_EXTERNAL_LINE)
    else:
        raise ValueError("subset must be 'z1' or 'z2'")
    checks: Dict[str, bool] = {}
    checks["cover_pairwise_skew"] = all(
        not lines_meet(cfg.lines[a], cfg.lines[b])
        for i, a in enumerate(cover) for b in cover[i + 1:])
    covered = sorted({p for i in cover for p in cfg.line_points[i]})
    checks["cover_is_exact"] = tuple(covered) == tuple(points)
    if not (checks["cover_pairwise_skew"] and checks["cover_is_exact"]):
        raise VerificationError(
            f"covering failure for {subset}: {checks}")
    proj = sample_generic_vertex(cfg, seed)
    grid = verify_grid(cfg, grid_l, grid_m)
    anchor = _anchor_on(cfg, grid, ext)
    quintic = build_quintic_cone(cfg, proj, grid, anchor, ext)
    checks["quintic_on_subset"] = all(quintic.vanishes_at(proj.images[i])
                                      for i in points)
    line_forms = [proj.push_plane_through_vertex([cfg.lines[i]])
                  for i in cover]
    product = line_forms[0]
    for lf in line_forms[1:]:
        product = product * lf
    checks["product_on_subset"] = all(product.vanishes_at(proj.images[i])
                                      for i in points)
    checks["no_line_in_quintic"] = all(not divides(lf, quintic)
                                       for lf in line_forms)
    checks["bezout_count"] = quintic.degree * product.degree == 30
    cert = HalfGridCertificate(subset, seed, proj.vertex, tuple(points),
                               cover, quintic, product, checks)
    if not cert.passed:
        failed = [k for k, v in checks.items() if not v]
        raise VerificationError(f"half-grid certificate failed: {failed}")
    return cert


@dataclass(frozen=True)
class RefutationReport:
    """Why a point set cannot be a half-grid of the forced CI type."""

    subset_name: str
    max_collinear: int
    low_degree_dims: Tuple[int, ...]
    forced_degrees: Tuple[Tuple[int, int], ...]
    refuted: bool
    details: Tuple[str, ...]

    def to_json(self) -> dict:
        return {
            "subset": self.subset_name,
            "max_collinear": self.max_collinear,
            "low_degree_dims": list(self.low_degree_dims),
            "forced_degrees": [list(t) for t in self.forced_degrees],
            "refuted": self.refuted,
            "details": list(self.details),
        }


def verify_not_half_grid(cfg: H4Configuration, seed: int,
                         subset: Optional[Sequence[int]] = None,
                         subset_name: str = "Z") -> RefutationReport:
    """Refute the half-grid property for the full set (or test a subset).

    Steps: (1) the largest collinear subset has 5 points; (2) no curve of
    degree below the smallest interpolating degree passes through the
    projected points, which forces the CI degrees; (3) a half-grid of type
    (a, b) needs a skew lines carrying N/a points each, impossible whenever
    N/a exceeds the collinearity bound.  The refutation fails (correctly) on
    a subset that is a half-grid.
    """
    indices = sorted(subset) if subset is not None else sorted(cfg.points)
    n = len(indices)
    mc = cfgmod.max_collinear([cfg.points[i] for i in indices])
    proj = sample_generic_vertex(cfg, seed)
    images = [proj.images[i] for i in indices]
    dims = []
    d = 1
    while True:
        dim = len(vanishing_space(images, d, 3))
        if dim > 0:
            break
        dims.append(dim)
        d += 1
    min_degree = d  # smallest degree with a curve through the images
    forced = tuple((a, n // a) for a in range(min_degree, n + 1)
                   if n % a == 0 and n // a >= min_degree)
    details = [
        f"max collinear points: {mc}",
        f"no plane curve of degree < {min_degree} passes through the"
        f" {n} projected points",
        f"possible CI types: {forced}",
    ]
    refuted = True
    for a, b in set(forced) | {(b, a) for a, b in forced}:
        per_line = n // a
        if per_line <= mc:
            refuted = False
            details.append(
                f"type ({a},{b}) would need {a} skew lines with {per_line}"
                f" points each; {per_line} <= {mc}, so not excluded")
        else:
            details.append(
                f"type ({a},{b}) needs {a} skew lines with {per_line} points"
                f" each, but no line carries more than {mc}")
    return RefutationReport(subset_name, mc, tuple(dims), forced, refuted,
                            tuple(details))
