import pytest
from gmpy2 import mpq

from splinedim.hilbert import binom_count
from splinedim.linalg import rank
from splinedim.poly import Poly, VARS_XY, parse
from splinedim.spline_complex import (Edge, StarComplex, StarValidationError,
                                      classify_configuration, dim_formula,
                                      dim_kernel, generator_degrees, is_spline,
                                      spline_basis, spline_series,
                                      star_from_affine, star_ideal,
                                      validate_star)

x = Poly.var("x")
y = Poly.var("y")
z = Poly.var("z")


def affine(text):
    return parse(text, VARS_XY)


class TestValidation:
    def test_needs_two_edges(self):
        with pytest.raises(StarValidationError):
            StarComplex([Edge(x, 0)])

    def test_rejects_adjacent_proportional_forms(self):
        with pytest.raises(StarValidationError) as err:
            validate_star([(x, 0), (-3 * x, 0)])
        assert any("proportional" in v for v in err.value.violations)

    def test_rejects_form_missing_the_vertex(self):
        with pytest.raises(StarValidationError) as err:
            validate_star([(x, 0), (y + z, 0)])
        assert any("vanish" in v for v in err.value.violations)

    def test_rejects_inhomogeneous_form(self):
        with pytest.raises(StarValidationError):
            validate_star([(x + x**2, 0), (y, 0)])

    def test_rejects_negative_smoothness(self):
        with pytest.raises(StarValidationError):
            validate_star([(x, -1), (y, 0)])

    def test_collects_all_violations(self):
        with pytest.raises(StarValidationError) as err:
            validate_star([(x + x**2, 0), (y + z, -2)])
        assert len(err.value.violations) >= 2

    def test_affine_curve_missing_vertex(self):
        with pytest.raises(StarValidationError):
            star_from_affine([affine("x^2 + 1"), affine("y")], 0)

    def test_z_divisible_form_warns(self):
        with pytest.warns(UserWarning):
            validate_star([(x * z, 0), (y, 0)])


class TestVertexShift:
    def test_shifted_complex_matches_centered_one(self):
        centered = star_from_affine([affine("x"), affine("y")], 1)
        shifted = star_from_affine(
            [affine("x - 1"), affine("y + 2")], 1, vertex=(1, -2))
        for d in range(6):
            assert dim_kernel(shifted, d) == dim_kernel(centered, d)

    def test_rational_vertex(self):
        C = star_from_affine(
            [affine("x - 1/2"), affine("y + 1/3")], 0, vertex=(mpq(1, 2), mpq(-1, 3)))
        assert dim_kernel(C, 2) == dim_formula(C, 0, 2)


class TestOracleAgreement:
    def test_three_curve_complex(self, three_curve_complex):
        for r in range(3):
            C = three_curve_complex.with_smoothness(r)
            for d in range(8):
                assert dim_formula(C, r, d) == dim_kernel(C, d)

    def test_repeated_tangent_complex(self, parabola_cubic_complex):
        for r in range(2):
            C = parabola_cubic_complex.with_smoothness(r)
            for d in range(8):
                assert dim_formula(C, r, d) == dim_kernel(C, d)

    def test_mixed_smoothness(self):
        C = validate_star([(x, 0), (homog("x^2 + y^2 - 2*y"), 1),
                           (homog("x^2 - 2*x + y^2 + 2*y"), 2)])
        # per-edge exponents feed both routes; the formula route needs the
        # uniform shortcut disabled
        with pytest.raises(ValueError):
            dim_formula(C, None, 5)
        J = star_ideal(C)
        for d in range(7):
            expected = sum(
                binom_count(d - (e.smoothness + 1) * e.form.degree() + 2, 2)
                for e in C.edges)
            from splinedim.hilbert import hilbert_data
            expected += hilbert_data(J).hilbert_function(d)
            assert dim_kernel(C, d) == expected


class TestDimensionShape:
    def test_monotone_in_degree(self, three_curve_complex):
        C = three_curve_complex.with_smoothness(1)
        dims = [dim_kernel(C, d) for d in range(9)]
        assert all(a <= b for a, b in zip(dims, dims[1:]))

    def test_antitone_in_smoothness(self, three_curve_complex):
        for d in range(7):
            dims = [dim_kernel(three_curve_complex.with_smoothness(r), d)
                    for r in range(3)]
            assert all(a >= b for a, b in zip(dims, dims[1:]))

    def test_global_polynomials_lower_bound(self, parabola_cubic_complex):
        for r in range(2):
            C = parabola_cubic_complex.with_smoothness(r)
            for d in range(7):
                assert dim_kernel(C, d) >= binom_count(d + 2, 2)

    def test_only_constants_in_low_degree(self, three_curve_complex):
        for r in range(3):
            C = three_curve_complex.with_smoothness(r)
            for d in range(3 * r + 3):
                assert dim_kernel(C, d) == binom_count(d + 2, 2)


class TestBasis:
    def test_degree_zero(self, three_curve_complex):
        basis = spline_basis(three_curve_complex.with_smoothness(0), 0)
        assert basis == [(Poly.const(1),) * 3]

    def test_count_membership_and_independence(self, three_curve_complex):
        C = three_curve_complex.with_smoothness(1)
        d = 6
        basis = spline_basis(C, d)
        assert len(basis) == dim_kernel(C, d)
        monos = sorted({e for s in basis for p in s for e in p.terms})
        index = {e: i for i, e in enumerate(monos)}
        rows = []
        for s in basis:
            assert is_spline(C, s)
            for p in s:
                assert p.is_zero() or (p.is_homogeneous() and p.degree() == d)
            row = [mpq(0)] * (len(monos) * 3)
            for face, p in enumerate(s):
                for e, c in p.terms.items():
                    row[face * len(monos) + index[e]] = c
            rows.append(row)
        assert rank(rows, len(monos) * 3) == len(basis)

    def test_non_spline_rejected(self, three_curve_complex):
        C = three_curve_complex.with_smoothness(0)
        assert not is_spline(C, (x**3, Poly.const(0), Poly.const(0)))
        assert is_spline(C, (x * homog("x^2 + y^2 - 2*y"),
                             Poly.const(0), Poly.const(0)))


class TestGeneratorDegrees:
    def test_pencil_of_conics_generators(self, conic_pencil_complexes):
        C = conic_pencil_complexes[0]
        assert generator_degrees(C, 1, 10) == (0, 6, 6)
        assert generator_degrees(C, 0, 6) == (0, 2, 4)

    def test_single_constant_generator_in_degree_zero(self, three_curve_complex):
        degs = generator_degrees(three_curve_complex, 0, 2)
        assert degs.count(0) == 1


class TestClassification:
    def test_distinct_tangent(self, three_curve_complex):
        cfg = classify_configuration(three_curve_complex)
        assert cfg.kind == "DistinctTangent"
        assert cfg.describe() == "DistinctTangent, degrees 1,2,2"
        assert cfg.pencil is None
        assert len(cfg.tangents) == 3

    def test_pencil(self, conic_pencil_complexes):
        for C in conic_pencil_complexes:
            cfg = classify_configuration(C)
            assert cfg.kind == "Pencil"
            assert cfg.pencil == (3, 3, 2)
            assert cfg.describe() == "Pencil N=3 s=3 n=2"

    def test_repeated_tangent_is_other(self, parabola_cubic_complex):
        cfg = classify_configuration(parabola_cubic_complex)
        assert cfg.kind == "Other"
        assert cfg.describe() == "Other: repeated tangent y (edges 1,3)"

    def test_shared_zero_is_other(self):
        C = star_from_affine(
            [affine("2*x^2 + 2*x*y + y^2 - 4*x - 3*y"),
             affine("x^2 - x*y + y^2 - 2*x + y"),
             affine("x^2 - 8*x*y - y^2 - 2*x + 6*y")], 1)
        cfg = classify_configuration(C)
        assert cfg.kind == "Other"
        assert any("zero" in note for note in cfg.diagnostics)

    def test_singular_edge_is_other(self):
        C = star_from_affine(
            [affine("x^3 - x"), affine("y^3 - y"),
             affine("x^3 + 2*y^3 + 5*x*y")], 0)
        cfg = classify_configuration(C)
        assert cfg.kind == "Other"
        assert any("tangent line" in note for note in cfg.diagnostics)


class TestSeries:
    def test_three_curve_series(self, three_curve_complex):
        s = spline_series(three_curve_complex, 1)
        assert s.hp_coefficients == (mpq(9), mpq(-11, 2), mpq(3, 2))
        assert s.postulation == 5
        assert s.multiplicity_value == 3
        assert s.hilbert_polynomial(6) == 30

    def test_series_matches_dimensions_past_postulation(self, conic_pencil_complexes):
        C = conic_pencil_complexes[1]
        s = spline_series(C, 2)
        for d in range(s.postulation + 1, s.postulation + 4):
            assert s.hilbert_polynomial(d) == dim_formula(C, 2, d)
        assert s.hilbert_polynomial(s.postulation) != dim_formula(
            C, 2, s.postulation)


def homog(text):
    from splinedim.poly import homogenize
    return homogenize(parse(text, VARS_XY))
