"""Convex hull peeling, shell classification, and the projection tally."""
import math

import numpy as np
import pytest

from phi8.hulls import (
    HullReport,
    all_dim_triples,
    analyze,
    build_vertices,
    emit_layer_obj,
    group_by_signature,
    peel_point_cloud,
    project,
    tally_all,
)

PHI = (1 + math.sqrt(5)) / 2


def octahedron():
    return np.array(
        [
            [1, 0, 0], [-1, 0, 0],
            [0, 1, 0], [0, -1, 0],
            [0, 0, 1], [0, 0, -1],
        ],
        dtype=float,
    )


def icosahedron():
    pts = []
    for a in (-1.0, 1.0):
        for b in (-PHI, PHI):
            pts.append([0.0, a, b])
            pts.append([a, b, 0.0])
            pts.append([b, 0.0, a])
    return np.array(pts)


def cube_with_center():
    pts = [[x, y, z] for x in (-1, 1) for y in (-1, 1) for z in (-1, 1)]
    pts.append([0.0, 0.0, 0.0])
    return np.array(pts, dtype=float)


class TestFixtures:
    def test_octahedron(self):
        layers = peel_point_cloud(octahedron())
        assert len(layers) == 1
        assert layers[0].classification == "regular octahedron"
        assert layers[0].vertex_count == 6
        assert layers[0].edge_count == 12
        assert layers[0].edge_spread <= 1e-12

    def test_icosahedron(self):
        layers = peel_point_cloud(icosahedron())
        assert len(layers) == 1
        assert layers[0].classification == "regular icosahedron"
        assert layers[0].edge_count == 30

    def test_stretched_icosahedron_is_irregular(self):
        pts = icosahedron() @ np.diag([1.0, 1.0, 1.4])
        layers = peel_point_cloud(pts)
        assert layers[0].classification == "irregular icosahedron"

    def test_cube_with_center(self):
        # triangulated cube facets carry diagonal edges, so it lands in
        # the catch-all bucket; the lone interior point remains
        layers = peel_point_cloud(cube_with_center())
        assert [l.classification for l in layers] == ["other(v=8)", "point"]

    def test_collinear(self):
        pts = np.array([[t, 2 * t, -t] for t in range(5)], dtype=float)
        layers = peel_point_cloud(pts)
        assert layers == [layers[0]]
        assert layers[0].classification == "collinear(v=5)"

    def test_coplanar(self):
        pts = np.array(
            [[x, y, 2.0] for x in range(3) for y in range(3)], dtype=float
        )
        layers = peel_point_cloud(pts)
        assert layers[0].classification == "coplanar(v=9)"

    def test_single_point(self):
        layers = peel_point_cloud(np.array([[1.0, 2.0, 3.0]]))
        assert layers[0].classification == "point"

    def test_nested_octahedra(self):
        pts = np.vstack([octahedron() * 3.0, octahedron()])
        layers = peel_point_cloud(pts)
        assert [l.classification for l in layers] == [
            "regular octahedron", "regular octahedron",
        ]

    def test_multiplicity_mismatch(self):
        with pytest.raises(ValueError):
            peel_point_cloud(octahedron(), [1, 2])


class TestRotationInvariance:
    def test_classification_invariant_under_rotation(self):
        # criterion-level property: >= 100 random orthogonal maps
        rng = np.random.default_rng(20260819)
        ico = icosahedron()
        octa = octahedron()
        for k in range(120):
            q, _ = np.linalg.qr(rng.normal(size=(3, 3)))
            scale = 0.5 + rng.random() * 4.0
            assert (
                peel_point_cloud(ico @ q.T * scale)[0].classification
                == "regular icosahedron"
            ), f"case {k}"
            assert (
                peel_point_cloud(octa @ q.T * scale)[0].classification
                == "regular octahedron"
            ), f"case {k}"


@pytest.fixture(scope="module")
def vset():
    return build_vertices()


class TestVertexSet:
    def test_240_distinct_vertices(self, vset):
        assert len(vset.points) == 240
        assert vset.positive_root_count == 120
        assert len(set(vset.points)) == 240

    def test_closed_under_negation(self, vset):
        pts = set(vset.points)
        assert all(tuple(-x for x in p) in pts for p in vset.points)

    def test_cmU_basis_also_builds(self):
        alt = build_vertices(basis="cmU")
        assert len(alt.points) == 240

    def test_unknown_basis(self):
        with pytest.raises(ValueError):
            build_vertices(basis="Q")


class TestProjection:
    def test_collapse_with_multiplicity(self, vset):
        proj = project(vset, (2, 3, 4))
        assert sum(proj.multiplicities) == 240
        assert len(proj.points) == 181

    def test_projection_validation(self, vset):
        for bad in ((1, 2), (1, 2, 2), (0, 1, 2), (7, 8, 9)):
            with pytest.raises(ValueError):
                project(vset, bad)

    def test_full_signature_dims_234(self, vset):
        # frozen against an independent float implementation of the
        # whole pipeline, which produced the identical 14-layer stack
        rep = analyze(vset, (2, 3, 4))
        assert [l.classification for l in rep.layers] == [
            "irregular icosahedron",
            "irregular icosahedron",
            "other(v=24)",
            "other(v=18)",
            "other(v=24)",
            "irregular icosahedron",
            "other(v=18)",
            "irregular icosahedron",
            "irregular icosahedron",
            "regular octahedron",
            "irregular icosahedron",
            "regular octahedron",
            "regular icosahedron",
            "point",
        ]

    def test_dims_123_ends_coplanar(self, vset):
        rep = analyze(vset, (1, 2, 3))
        assert rep.layers[-1].classification.startswith("coplanar")

    def test_antidiagonal_symmetry(self, vset):
        # reversing all coordinate picks i -> 9-i yields the same stack
        a = analyze(vset, (1, 2, 3))
        b = analyze(vset, (6, 7, 8))
        assert a.signature == b.signature


@pytest.fixture(scope="module")
def reports(vset):
    return tally_all(vset)


class TestTally:
    def test_all_triples_covered(self, reports):
        assert len(reports) == 56
        assert [r.dims for r in reports] == all_dim_triples()

    def test_multiple_signatures(self, reports):
        groups = group_by_signature(reports)
        assert len(groups) > 1
        assert sorted(d for dims in groups.values() for d in dims) == all_dim_triples()

    def test_reports_serializable(self, reports):
        d = reports[0].to_dict()
        assert d["dims"] == [1, 2, 3]
        assert isinstance(d["signature"], str)


class TestObjEmission:
    def test_obj_format(self):
        layer = peel_point_cloud(octahedron())[0]
        text = emit_layer_obj(layer, "octa")
        lines = text.splitlines()
        assert lines[0] == "o octa"
        assert sum(1 for l in lines if l.startswith("v ")) == 6
        assert sum(1 for l in lines if l.startswith("f ")) == 8
        # all face indices are in range
        for l in lines:
            if l.startswith("f "):
                assert all(1 <= int(t) <= 6 for t in l.split()[1:])

    def test_obj_deterministic(self):
        layer = peel_point_cloud(icosahedron())[0]
        assert emit_layer_obj(layer, "ico") == emit_layer_obj(layer, "ico")
