import pytest
from gmpy2 import mpq

from splinedim.groebner import Ideal, saturate_variable
from splinedim.hilbert import (_monomials, binom, binom_count, hilbert_data,
                               minimal_generator_degrees,
                               syzygy_degrees_codim2)
from splinedim.linalg import rank
from splinedim.poly import Poly, VARS_XY, parse

x = Poly.var("x")
y = Poly.var("y")
z = Poly.var("z")

px = Poly.var("x", VARS_XY)
py = Poly.var("y", VARS_XY)


class TestBinomials:
    def test_honest_binomial_at_negative_argument(self):
        assert binom(-1, 2) == 1
        assert binom(-2, 2) == 3
        assert binom(5, 2) == 10
        assert binom(3, 0) == 1

    def test_counting_binomial_truncates(self):
        assert binom_count(-1, 2) == 0
        assert binom_count(1, 2) == 0
        assert binom_count(4, 2) == 6


class TestHilbertData:
    def test_monomial_complete_intersection(self):
        # <x^2, y^3>: HF converges to the product 2*3 per slice of Q[z]
        hd = hilbert_data(Ideal([x**2, y**3]))
        assert hd.dimension == 1
        assert hd.multiplicity() == 6
        assert [hd.hilbert_function(d) for d in range(8)] == [1, 3, 5, 6, 6, 6, 6, 6]

    def test_zero_dimensional(self):
        hd = hilbert_data(Ideal([x, y**2, z**3]))
        assert hd.dimension == 0
        assert hd.multiplicity() == 0

    def test_positive_dimensional_multiplicity_is_none(self):
        assert hilbert_data(Ideal([x])).multiplicity() is None

    def test_polynomial_quotient_postulation_sentinel(self):
        hd = hilbert_data(Ideal([x]))
        assert hd.postulation() == -1
        for d in range(6):
            assert hd.hilbert_function(d) == d + 1

    def test_hilbert_function_agrees_with_polynomial_past_postulation(self):
        gens = [y * z - x**2, x * z + y**2, (y * z**2 - x**3)]
        hd = hilbert_data(Ideal([g**2 for g in gens]))
        post = hd.postulation()
        assert post >= 0
        coeffs = hd.hp_coeffs()

        def hp(d):
            return sum(c * d**i for i, c in enumerate(coeffs))

        assert hd.hilbert_function(post) != hp(post)
        for d in range(post + 1, post + 5):
            assert hd.hilbert_function(d) == hp(d)

    def test_nonmonomial_matches_rank_computation(self):
        # independent route: rank the monomial multiples of the raw
        # generators in each degree, no Groebner machinery involved
        def quotient_dim(gens, d):
            monos = list(_monomials(3, d))
            index = {e: i for i, e in enumerate(monos)}
            rows = []
            for g in gens:
                for m in _monomials(3, d - g.degree()):
                    row = [mpq(0)] * len(monos)
                    for e, c in g.terms.items():
                        row[index[tuple(a + b for a, b in zip(e, m))]] = c
                    rows.append(row)
            used = rank(rows, len(monos)) if rows else 0
            return len(monos) - used

        families = [
            [y * z - x**2, x * z + y**2],
            [x**2 + y**2 - z**2, x * y],
            [(x + y + z) ** 2, x**3 - y**3],
        ]
        for gens in families:
            hd = hilbert_data(Ideal(gens))
            for d in range(7):
                assert hd.hilbert_function(d) == quotient_dim(gens, d)

    def test_multiplicity_invariant_under_saturation(self):
        a = Ideal([x**2 * z, x * y, y**2 * z, x**3, y**4])
        s = saturate_variable(a, "z")
        assert hilbert_data(a).multiplicity() == hilbert_data(s).multiplicity()

    def test_degree_cap_that_never_bites_gives_full_data(self):
        # the only pair has lcm degree 4, under the cap, so data is complete
        hd = hilbert_data(Ideal([x**2, y**2]), degree_cap=5)
        assert hd.valid_to is None
        assert hd.multiplicity() == 4

    def test_degree_cap_guard(self):
        # the leads x^2 and x*y are not coprime, so their degree-3 pair
        # stays in the queue and a cap of 2 really truncates
        a = Ideal([x**2 + y**2, x * y])
        hd = hilbert_data(a, degree_cap=2)
        assert hd.valid_to == 2
        full = hilbert_data(Ideal([x**2 + y**2, x * y]))
        for d in range(3):
            assert hd.hilbert_function(d) == full.hilbert_function(d)
        with pytest.raises(ValueError):
            hd.hilbert_function(3)
        with pytest.raises(ValueError):
            hd.hp_coeffs()

    def test_hp_coeffs_of_plane(self):
        hd = hilbert_data(Ideal([], VARS_XY + ("z",)))
        assert hd.hp_coeffs() == (mpq(1), mpq(3, 2), mpq(1, 2))


class TestBettiDegrees:
    def test_minimal_generators_drop_redundant(self):
        assert minimal_generator_degrees(Ideal([x, x * y])) == (1,)
        assert minimal_generator_degrees(Ideal([x**2, x * y, y**3])) == (2, 2, 3)
        assert minimal_generator_degrees(
            Ideal([x**2, y**2, x**2 + y**2])) == (2, 2)

    def test_syzygies_of_plane_point(self):
        assert syzygy_degrees_codim2(Ideal([px, py])) == (2,)

    def test_syzygies_of_fat_point(self):
        assert syzygy_degrees_codim2(Ideal([px**2, px * py, py**2])) == (3, 3)

    def test_syzygies_count_is_generators_minus_one(self):
        for gens in ([px**3, px * py**2, py**4],
                     [px**5, px**4 * py, py**5],
                     [px**2, py**3]):
            a = Ideal(gens)
            syz = syzygy_degrees_codim2(a)
            assert len(syz) == len(minimal_generator_degrees(a)) - 1

    def test_spread_witness(self):
        syz = syzygy_degrees_codim2(Ideal([px**5, px**4 * py, py**5]))
        assert syz == (6, 9)
