"""Grid sampling of the immersion and mesh export.

Vertices inside an exclusion radius of a puncture (or lattice point, on the
torus) are dropped; faces are the two triangles of each grid quad whose
corners all survived.  The singular flags mark, along every grid edge where
|rho| - 1 changes sign, the endpoint closer to the crossing, which tags
exactly the sample ring nearest the singular locus.
"""

from __future__ import annotations

import io
from dataclasses import dataclass

import numpy as np

from .errors import EmptyMesh
from .grids import GridSpec
from .surface import WeierstrassData, _check_strict, _rho_pair, evaluate_psi

__all__ = ["SurfaceMesh", "sample_mesh", "export", "export_obj", "export_csv"]


@dataclass(frozen=True)
class SurfaceMesh:
    vertices: np.ndarray  # (k, 3) float
    faces: np.ndarray  # (f, 3) int, referencing retained vertices
    singular_flags: np.ndarray  # (k,) bool
    domain_points: np.ndarray  # (k,) complex

    @property
    def n_vertices(self):
        return len(self.vertices)

    @property
    def n_faces(self):
        return len(self.faces)


def _keep_mask(data: WeierstrassData, z, exclusion_radius):
    if data.domain.kind == "torus":
        return data.lattice.distance_to_lattice(z) >= exclusion_radius
    keep = np.ones(z.shape, dtype=bool)
    for p in data.domain.finite_ends():
        keep &= np.abs(z - p) >= exclusion_radius
    return keep


def _singular_flags(data, z, keep, wrap_r=False, wrap_c=False):
    rho, _ = _rho_pair(data)
    flags = np.zeros(z.shape, dtype=bool)
    if rho is None:
        return flags
    from .rational import RationalFunction
    from .elliptic import EllipticRatio

    if (isinstance(rho, RationalFunction) and rho.is_constant) or (
        isinstance(rho, EllipticRatio) and rho.is_constant
    ):
        return flags
    s = np.full(z.shape, np.nan)
    with np.errstate(all="ignore"):
        vals = np.abs(np.asarray(rho(z[keep]))) - 1.0
    s[keep] = np.where(np.isfinite(vals), vals, np.nan)

    def mark(s1, s2, i1, i2):
        # sign change along the edge: flag the endpoint nearer the crossing
        change = (s1 * s2 < 0) & np.isfinite(s1) & np.isfinite(s2)
        first = change & (np.abs(s1) <= np.abs(s2))
        second = change & ~first
        flags[i1] |= first
        flags[i2] |= second

    n, m = z.shape
    ii, jj = np.meshgrid(np.arange(n), np.arange(m), indexing="ij")
    # column-direction edges
    mark(s[:, :-1], s[:, 1:], (ii[:, :-1], jj[:, :-1]), (ii[:, 1:], jj[:, 1:]))
    # row-direction edges
    mark(s[:-1, :], s[1:, :], (ii[:-1, :], jj[:-1, :]), (ii[1:, :], jj[1:, :]))
    if wrap_c:
        mark(s[:, -1], s[:, 0], (ii[:, -1], jj[:, -1]), (ii[:, 0], jj[:, 0]))
    if wrap_r:
        mark(s[-1, :], s[0, :], (ii[-1, :], jj[-1, :]), (ii[0, :], jj[0, :]))
    return flags


def sample_mesh(
    data: WeierstrassData,
    grid: GridSpec,
    exclusion_radius: float = 0.05,
    force: bool = False,
) -> SurfaceMesh:
    """Sample psi over the grid and triangulate the retained quads."""
    _check_strict(data, force)
    tau = data.domain.tau if data.domain.kind == "torus" else None
    z, (wrap_r, wrap_c) = grid.points(tau)
    keep = _keep_mask(data, z, exclusion_radius)
    if not keep.any():
        raise EmptyMesh("every sample fell inside an exclusion zone")
    flags_grid = _singular_flags(data, z, keep, wrap_r, wrap_c)

    n, m = z.shape
    index = -np.ones((n, m), dtype=int)
    zk = z[keep]
    index[keep] = np.arange(len(zk))
    ps = evaluate_psi(data, zk, force=force)
    verts = np.column_stack(
        [np.real(np.asarray(ps.x)), np.imag(np.asarray(ps.x)), np.asarray(ps.x3)]
    )

    faces = []
    rows = n if wrap_r else n - 1
    cols = m if wrap_c else m - 1
    for i in range(rows):
        i2 = (i + 1) % n
        for j in range(cols):
            j2 = (j + 1) % m
            v00, v10 = index[i, j], index[i2, j]
            v01, v11 = index[i, j2], index[i2, j2]
            if v00 >= 0 and v10 >= 0 and v11 >= 0:
                faces.append((v00, v10, v11))
            if v00 >= 0 and v11 >= 0 and v01 >= 0:
                faces.append((v00, v11, v01))
    return SurfaceMesh(
        vertices=verts,
        faces=np.array(faces, dtype=int).reshape(-1, 3),
        singular_flags=flags_grid[keep],
        domain_points=zk,
    )


def export_obj(mesh: SurfaceMesh) -> bytes:
    """Wavefront OBJ: 'v x y z' lines, then 1-based 'f i j k' lines."""
    buf = io.StringIO()
    for x, y, zc in mesh.vertices:
        buf.write(f"v {x:.17g} {y:.17g} {zc:.17g}\n")
    for a, b, c in mesh.faces:
        buf.write(f"f {a + 1} {b + 1} {c + 1}\n")
    return buf.getvalue().encode()


def export_csv(mesh: SurfaceMesh, z_scale: float = None) -> bytes:
    """CSV with header re,im,x,y,z,singular; one row per vertex.

    A view factor on the third coordinate, when given, is recorded in a
    comment line so the file stays self-describing.
    """
    buf = io.StringIO()
    if z_scale is not None and z_scale != 1.0:
        buf.write(f"# z_scale={z_scale:.17g}\n")
        scale = z_scale
    else:
        scale = 1.0
    buf.write("re,im,x,y,z,singular\n")
    for p, (x, y, zc), s in zip(
        mesh.domain_points, mesh.vertices, mesh.singular_flags
    ):
        buf.write(
            f"{p.real:.17g},{p.imag:.17g},{x:.17g},{y:.17g},{zc * scale:.17g},"
            f"{int(s)}\n"
        )
    return buf.getvalue().encode()


def export(mesh: SurfaceMesh, format: str = "obj", **kwargs) -> bytes:
    if format == "obj":
        return export_obj(mesh)
    if format == "csv":
        return export_csv(mesh, **kwargs)
    raise ValueError(f"unknown export format {format!r}")
