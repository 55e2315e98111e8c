from math import gcd

import pytest

from toric3.errors import DegenerateConfiguration, InvalidParams, OutOfRange, ParseError
from toric3.polytopes import (
    WIDTH1_VOLUMES,
    WIDTH2_VOLUMES,
    AffineUnimodularMap,
    LatticePolytope,
    affine_dependence,
    apply_map,
    embedded_polygon,
    empty_tetrahedron,
    hull_lattice_points,
    is_empty_tetrahedron,
    lattice_width,
    normalized_volume_tetra,
    parse_polytope_spec,
    white_canonical,
    white_equivalence_map,
    width1_representative,
    width2_representative,
)


def coprime_pairs(t_max):
    for t in range(1, t_max + 1):
        for s in range(t + 1):
            if gcd(s, t) == 1:
                yield s, t


class TestEmptyTetrahedron:
    def test_unit_example(self):
        p = empty_tetrahedron(1, 1)
        assert p.points == ((0, 0, 0), (1, 0, 0), (0, 0, 1), (1, 1, 1))

    def test_invalid_gcd(self):
        with pytest.raises(InvalidParams):
            empty_tetrahedron(2, 4)
        with pytest.raises(InvalidParams):
            empty_tetrahedron(1, 0)

    def test_emptiness_by_scan(self):
        # no fifth lattice point in the hull, checked by box scan
        for s, t in [(3, 7), (1, 1), (2, 5), (5, 12)]:
            assert is_empty_tetrahedron(empty_tetrahedron(s, t))

    def test_nonempty_counterexample(self):
        # doubling a vertex direction introduces interior points
        fat = LatticePolytope(((0, 0, 0), (2, 0, 0), (0, 2, 0), (0, 0, 2)))
        assert not is_empty_tetrahedron(fat)
        assert len(hull_lattice_points(fat.points)) == 10


class TestWidth1Representatives:
    def test_rows(self):
        assert width1_representative((2, 2)).points == (
            (0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0), (0, 0, 1),
        )
        assert width1_representative((3, 2), 1, 1).points == (
            (0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1),
        )
        assert width1_representative((3, 1)).points == (
            (0, 0, 0), (1, 0, 0), (0, 1, 0), (-1, -1, 0), (0, 0, 1),
        )
        assert width1_representative((2, 1), 1, 2).points == (
            (0, 0, 0), (1, 0, 0), (0, 0, 1), (-1, 0, 0), (1, 2, 1),
        )

    def test_param_constraints(self):
        with pytest.raises(InvalidParams):
            width1_representative((2, 1), 2, 3)  # needs s <= t/2
        with pytest.raises(InvalidParams):
            width1_representative((3, 2), 0, 1)  # needs s > 0
        with pytest.raises(InvalidParams):
            width1_representative((3, 2), 2, 4)  # gcd


class TestWidth2Representatives:
    def test_row1(self):
        assert width2_representative(1).points == (
            (0, 0, 0), (1, 0, 0), (0, 1, 0), (-1, -1, 0), (1, 2, 3),
        )

    def test_row2_signature(self):
        sig = affine_dependence(width2_representative(2))
        assert sig.pair == (4, 1)
        assert sig.dependence == (-4, 1, 1, 1, 1)

    def test_out_of_range(self):
        with pytest.raises(OutOfRange):
            width2_representative(10)
        with pytest.raises(OutOfRange):
            width2_representative(0)


class TestEmbeddedPolygons:
    def test_points(self):
        assert embedded_polygon(1).points == (
            (0, 0, 0), (1, 0, 0), (2, 0, 0), (3, 0, 0),
        )
        assert embedded_polygon(3).points == (
            (0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0),
        )
        assert embedded_polygon(4).points == (
            (0, 0, 0), (1, 0, 0), (0, 1, 0), (-1, -1, 0),
        )

    def test_out_of_range(self):
        with pytest.raises(OutOfRange):
            embedded_polygon(5)


class TestAffineDependence:
    @pytest.mark.parametrize("s,t", [(0, 1), (1, 2), (1, 3), (2, 5), (3, 7)])
    def test_sig21_volume_vector(self, s, t):
        if 2 * s > t:
            pytest.skip("outside table constraint")
        sig = affine_dependence(width1_representative((2, 1), s, t))
        assert sig.volumes == WIDTH1_VOLUMES[(2, 1)](s, t)
        assert sig.pair == (2, 1)
        assert sig.dependence == (-2, 1, 0, 1, 0)

    def test_sig22(self):
        sig = affine_dependence(width1_representative((2, 2)))
        assert sig.volumes == (-1, 1, 1, -1, 0)
        assert sig.pair == (2, 2)

    @pytest.mark.parametrize("s,t", [(1, 1), (1, 2), (2, 3), (3, 5)])
    def test_sig32(self, s, t):
        sig = affine_dependence(width1_representative((3, 2), s, t))
        assert sig.volumes == (-s - t, s, t, 1, -1)
        assert sig.pair == (3, 2)

    def test_dependence_sums_are_exact(self):
        for poly in [
            width1_representative((2, 1), 2, 5),
            width1_representative((3, 2), 3, 4),
            width2_representative(7),
        ]:
            sig = affine_dependence(poly)
            for vec in (sig.volumes, sig.dependence):
                assert sum(vec) == 0
                for axis in range(3):
                    assert sum(c * p[axis] for c, p in zip(vec, poly.points)) == 0

    def test_dependence_is_primitive_and_sign_normalized(self):
        for row in range(1, 10):
            sig = affine_dependence(width2_representative(row))
            nz = [c for c in sig.dependence if c]
            g = 0
            for c in nz:
                g = gcd(g, c)
            assert g == 1
            assert nz[0] < 0

    def test_degenerate(self):
        coplanar = LatticePolytope(
            ((0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0), (2, 1, 0))
        )
        with pytest.raises(DegenerateConfiguration):
            affine_dependence(coplanar)


class TestLatticeWidth:
    def test_examples(self):
        assert lattice_width(width1_representative((2, 2))) == 1
        assert lattice_width(width2_representative(1)) == 2
        assert lattice_width(LatticePolytope(((3, 1, 4),))) == 0

    def test_width1_families(self):
        assert lattice_width(width1_representative((2, 1), 1, 3)) == 1
        assert lattice_width(width1_representative((3, 1))) == 1
        assert lattice_width(width1_representative((3, 2), 2, 3)) == 1

    def test_certificate(self):
        w, u = lattice_width(width1_representative((2, 2)), with_direction=True)
        assert w == 1
        pts = width1_representative((2, 2)).points
        dots = [sum(a * b for a, b in zip(u, p)) for p in pts]
        assert max(dots) - min(dots) == 1


class TestNormalizedVolume:
    @pytest.mark.parametrize("s,t", list(coprime_pairs(9)))
    def test_tetra_volume_is_t(self, s, t):
        assert normalized_volume_tetra(*empty_tetrahedron(s, t).points) == t

    def test_unit_and_coplanar(self):
        assert normalized_volume_tetra((0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)) == 1
        assert normalized_volume_tetra((0, 0, 0), (1, 0, 0), (2, 0, 0), (1, 1, 0)) == 0

    def test_unimodular_invariance(self):
        m = AffineUnimodularMap(((1, 2, 0), (0, 1, 3), (0, 0, 1)), (5, -1, 2))
        for s, t in [(1, 1), (2, 3), (3, 7)]:
            poly = empty_tetrahedron(s, t)
            image = apply_map(m, poly)
            assert normalized_volume_tetra(*image.points) == t


class TestWhiteCanonical:
    def test_examples(self):
        assert white_canonical(5, 7) == 2  # orbit {2,3,4,5}
        assert white_canonical(6, 7) == 1  # orbit {1,6}
        assert white_canonical(0, 1) == 0

    def test_invalid(self):
        with pytest.raises(InvalidParams):
            white_canonical(2, 4)

    @pytest.mark.parametrize("t", range(1, 21))
    def test_idempotent_and_orbit_constant(self, t):
        for s in range(t + 1):
            if gcd(s, t) != 1:
                continue
            c = white_canonical(s, t)
            assert white_canonical(c, t) == c
            orbit = {s % t, (-s) % t}
            if t > 1:
                inv = pow(s, -1, t)
                orbit |= {inv, (-inv) % t}
            for r in orbit:
                if gcd(r, t) == 1 or t == 1:
                    assert white_canonical(r, t) == c


class TestWhiteEquivalenceMap:
    def test_identity_case(self):
        m = white_equivalence_map(2, 2, 5)
        assert m.matrix == ((1, 0, 0), (0, 1, 0), (0, 0, 1))
        assert m.shift == (0, 0, 0)

    def test_case2_example(self):
        # 3 = 5^-1 mod 7
        m = white_equivalence_map(3, 5, 7)
        assert m.matrix == ((3, -2, 0), (7, -5, 0), (0, 0, -1))
        assert m.shift == (0, 0, 1)
        image = apply_map(m, empty_tetrahedron(5, 7))
        assert set(image.points) == set(empty_tetrahedron(3, 7).points)

    def test_none_case(self):
        # {+-2^(+-1)} mod 5 = {2, 3}, does not contain 1
        assert white_equivalence_map(1, 2, 5) is None

    def test_invalid_params(self):
        with pytest.raises(InvalidParams):
            white_equivalence_map(2, 1, 4)


class TestApplyMap:
    def test_identity(self):
        poly = width2_representative(3)
        ident = AffineUnimodularMap(((1, 0, 0), (0, 1, 0), (0, 0, 1)), (0, 0, 0))
        assert apply_map(ident, poly).points == poly.points

    def test_translation_preserves_width(self):
        shift = AffineUnimodularMap(((1, 0, 0), (0, 1, 0), (0, 0, 1)), (1, 1, 1))
        for poly in [width1_representative((3, 1)), width2_representative(4)]:
            assert lattice_width(apply_map(shift, poly)) == lattice_width(poly)

    def test_non_unimodular_rejected(self):
        with pytest.raises(InvalidParams):
            AffineUnimodularMap(((2, 0, 0), (0, 1, 0), (0, 0, 1)), (0, 0, 0))


class TestSpecGrammar:
    @pytest.mark.parametrize(
        "text,expected",
        [
            ("T(1,2)", empty_tetrahedron(1, 2)),
            ("P21(1,3)", width1_representative((2, 1), 1, 3)),
            ("P22", width1_representative((2, 2))),
            ("P31", width1_representative((3, 1))),
            ("P32(2,3)", width1_representative((3, 2), 2, 3)),
            ("W2:4", width2_representative(4)),
            ("E:2", embedded_polygon(2)),
        ],
    )
    def test_named_forms(self, text, expected):
        assert parse_polytope_spec(text).points == expected.points

    def test_explicit_points(self):
        poly = parse_polytope_spec("[(0,0,0);(1,0,0);(-1,-1,0)]")
        assert poly.points == ((0, 0, 0), (1, 0, 0), (-1, -1, 0))

    @pytest.mark.parametrize(
        "bad", ["T(2,4)", "P21(2,3)", "W2:10", "E:0", "Q(1,2)", "[]", "nope"]
    )
    def test_parse_errors(self, bad):
        with pytest.raises(ParseError):
            parse_polytope_spec(bad)
