"""Mesh sampling, singular flags, exports, determinism."""

import numpy as np

from afront.catalog import catalog_build
from afront.errors import EmptyMesh, PeriodConditionViolated
from afront.grids import GridSpec
from afront.meshing import export, export_csv, export_obj, sample_mesh
from afront.rational import Polynomial, RationalFunction
from afront.surface import DomainSpec, WeierstrassData


def test_rotational_mesh_counts_and_flags():
    data = catalog_build("rotational", a=2.0)
    mesh = sample_mesh(data, GridSpec("annulus", 64, 64, rmin=0.2, rmax=2.0))
    assert mesh.n_vertices == 64 * 64
    flagged = mesh.domain_points[mesh.singular_flags]
    assert len(flagged) == 64  # one full ring
    radii = np.abs(flagged)
    assert np.max(radii) - np.min(radii) < 1e-12
    # the flagged ring is the sample radius nearest the singular circle
    grid_r = np.linspace(0.2, 2.0, 64)
    nearest = grid_r[np.argmin(np.abs(grid_r - 1 / np.sqrt(2)))]
    assert abs(radii[0] - nearest) < 1e-12


def test_paraboloid_mesh_no_flags():
    data = catalog_build("paraboloid", b=0.0)
    mesh = sample_mesh(data, GridSpec("annulus", 32, 32, rmin=0.5, rmax=2.0))
    assert mesh.n_vertices == 1024
    assert mesh.singular_flags.sum() == 0


def test_torus_mesh_smoke():
    data = catalog_build("torus_10pi")
    mesh = sample_mesh(data, GridSpec("fpp", 48, 48), exclusion_radius=0.08)
    assert mesh.n_vertices > 0
    assert np.all(np.isfinite(mesh.vertices))


def test_faces_reference_retained_vertices():
    data = catalog_build("torus_10pi")
    mesh = sample_mesh(data, GridSpec("fpp", 24, 24), exclusion_radius=0.1)
    assert mesh.faces.min() >= 0
    assert mesh.faces.max() < mesh.n_vertices


def test_obj_export_shape():
    data = catalog_build("rotational")
    mesh = sample_mesh(data, GridSpec("annulus", 8, 8, rmin=0.5, rmax=1.5))
    text = export_obj(mesh).decode()
    vlines = [l for l in text.splitlines() if l.startswith("v ")]
    flines = [l for l in text.splitlines() if l.startswith("f ")]
    assert len(vlines) == mesh.n_vertices
    assert len(flines) == mesh.n_faces
    # round trip
    verts = np.array([[float(x) for x in l.split()[1:]] for l in vlines])
    assert np.max(np.abs(verts - mesh.vertices)) < 1e-9
    idx = np.array([[int(x) for x in l.split()[1:]] for l in flines]) - 1
    assert np.array_equal(idx, mesh.faces)


def test_csv_export_shape():
    data = catalog_build("rotational")
    mesh = sample_mesh(data, GridSpec("annulus", 8, 8, rmin=0.5, rmax=1.5))
    rows = export_csv(mesh).decode().strip().split("\n")
    assert rows[0] == "re,im,x,y,z,singular"
    assert len(rows) == mesh.n_vertices + 1
    scaled = export_csv(mesh, z_scale=0.5).decode().strip().split("\n")
    assert scaled[0].startswith("# z_scale=")
    z0 = float(rows[1].split(",")[4])
    z1 = float(scaled[2].split(",")[4])
    assert abs(z1 - 0.5 * z0) < 1e-12


def test_export_dispatch():
    data = catalog_build("rotational")
    mesh = sample_mesh(data, GridSpec("annulus", 6, 6, rmin=0.5, rmax=1.5))
    assert export(mesh, "obj") == export_obj(mesh)
    assert export(mesh, "csv") == export_csv(mesh)


def test_deterministic_output():
    spec = GridSpec("annulus", 16, 16, rmin=0.3, rmax=1.8)
    a = export_obj(sample_mesh(catalog_build("rotational"), spec))
    b = export_obj(sample_mesh(catalog_build("rotational"), spec))
    assert a == b


def test_refinement_is_pointwise_consistent():
    data = catalog_build("rotational", a=2.0)
    coarse = sample_mesh(data, GridSpec("annulus", 16, 16, rmin=0.3, rmax=1.5))
    fine = sample_mesh(data, GridSpec("annulus", 31, 32, rmin=0.3, rmax=1.5))
    matched = 0
    fine_pts = fine.domain_points
    for i, p in enumerate(coarse.domain_points):
        j = np.argmin(np.abs(fine_pts - p))
        if abs(fine_pts[j] - p) < 1e-12:
            matched += 1
            assert np.max(np.abs(fine.vertices[j] - coarse.vertices[i])) < 1e-9
    assert matched == coarse.n_vertices


def test_empty_mesh_error():
    data = catalog_build("rotational")
    try:
        sample_mesh(data, GridSpec("annulus", 4, 4, rmin=0.01, rmax=0.03),
                    exclusion_radius=0.05)
        assert False, "expected EmptyMesh"
    except EmptyMesh:
        pass


def test_strict_period_gate(monkeypatch):
    bad = WeierstrassData(
        DomainSpec("plane", (0j,)),
        RationalFunction(Polynomial([1]), Polynomial([0, 1])),
        RationalFunction(Polynomial([0, 2j]), Polynomial([1])),
    )
    grid = GridSpec("annulus", 6, 6, rmin=0.5, rmax=1.5)
    try:
        sample_mesh(bad, grid)
        assert False, "expected PeriodConditionViolated"
    except PeriodConditionViolated:
        pass
    # force flag and env override both permit evaluation
    import warnings

    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        mesh = sample_mesh(bad, grid, force=True)
        assert mesh.n_vertices == 36
        monkeypatch.setenv("AFRONT_STRICT", "0")
        mesh2 = sample_mesh(bad, grid)
        assert mesh2.n_vertices == 36
