"""E8 root coordinates, the extended Hamming code, and Construction A."""
import time
from fractions import Fraction

import pytest

from phi8.lattice import (
    Hamming84,
    check_vertex_coords,
    construction_a,
    count_contact_pairs,
    e8_height_histogram,
    e8_vertex_coords,
    gen_e8_roots,
    hadamard_code_correspondence,
    hamming84,
    inner_product_histogram,
    norm_sq,
)


@pytest.fixture(scope="module")
def roots():
    return gen_e8_roots()


class TestRoots:
    def test_count(self, roots):
        assert len(roots) == 240

    def test_split_integer_half_integer(self, roots):
        integer = [v for v in roots if all(x.denominator == 1 for x in v)]
        half = [v for v in roots if all(x.denominator == 2 for x in v)]
        assert len(integer) == 112
        assert len(half) == 128
        assert len(integer) + len(half) == len(roots)

    def test_norms(self, roots):
        assert all(norm_sq(v) == 2 for v in roots)

    def test_half_integer_sign_parity(self, roots):
        for v in roots:
            if v[0].denominator == 2:
                assert sum(1 for x in v if x < 0) % 2 == 0

    def test_contact_pairs(self, roots):
        assert count_contact_pairs(roots) == 6720

    def test_inner_product_histogram(self, roots):
        hist = inner_product_histogram(roots)
        # <a,b> in {-2,-1,0,1} for distinct unordered pairs; -2 only for
        # antipodes, and the +-1 counts match by symmetry
        assert set(hist) == {Fraction(-2), Fraction(-1), Fraction(0), Fraction(1)}
        assert hist[Fraction(-2)] == 120
        assert hist[Fraction(1)] == 6720
        assert hist[Fraction(-1)] == 6720
        total = 240 * 239 // 2
        assert sum(hist.values()) == total

    def test_closed_under_negation(self, roots):
        rootset = set(roots)
        assert all(tuple(-x for x in v) in rootset for v in roots)


class TestHamming:
    def test_counts_and_weights(self):
        code = hamming84()
        assert len(code.codewords) == 16
        assert code.weight_enumerator() == {0: 1, 4: 14, 8: 1}
        assert code.min_distance() == 4

    def test_self_dual_doubly_even(self):
        code = hamming84()
        assert code.is_self_dual()
        assert code.is_doubly_even()

    def test_closed_under_addition(self):
        words = set(hamming84().codewords)
        for u in words:
            for v in words:
                assert tuple((a + b) % 2 for a, b in zip(u, v)) in words


class TestConstructionA:
    def test_report(self):
        t0 = time.monotonic()
        rep = construction_a()
        elapsed = time.monotonic() - t0
        assert rep.is_even
        assert rep.gram_det == 1
        assert rep.is_positive_definite
        assert rep.minimal_vector_count == 240
        assert elapsed < 10.0

    def test_rejects_wrong_code(self):
        bad = Hamming84(
            generator=((1, 0, 0, 0, 0, 0, 0, 1),) * 4,
            codewords=((0,) * 8,),
        )
        with pytest.raises(ValueError):
            construction_a(bad)

    def test_gram_integral(self):
        rep = construction_a()
        assert all(g.denominator == 1 for row in rep.gram for g in row)


class TestHadamardCorrespondence:
    def test_bijection(self):
        corr = hadamard_code_correspondence()
        assert corr.weight_enumerator_matches
        assert corr.holds
        assert corr.permutation is not None
        assert sorted(corr.permutation) == list(range(8))

    def test_permutation_is_not_identity(self):
        # the raw bit images differ from the systematic codeword set,
        # so the matching permutation must actually move columns
        corr = hadamard_code_correspondence()
        assert corr.permutation != tuple(range(8))
        raw = set(corr.mapped)
        assert raw != set(hamming84().codewords)

    def test_mapped_is_closed_code(self):
        corr = hadamard_code_correspondence()
        words = set(corr.mapped)
        assert len(words) == 16
        for u in words:
            for v in words:
                assert tuple((a + b) % 2 for a, b in zip(u, v)) in words


class TestVertexCoords:
    def test_signed_images_are_the_roots(self, roots):
        check = check_vertex_coords()
        assert check.coord_count == 240
        assert check.norms_all_two
        assert check.set_matches_roots
        assert check.inner_histogram_matches

    def test_coords_sorted_deterministic(self):
        assert e8_vertex_coords() == e8_vertex_coords()


class TestHeightHistogram:
    def test_total_and_peak(self):
        hist = e8_height_histogram()
        assert sum(hist.values()) == 120
        assert max(hist) == 29
        assert hist[1] == 8

    def test_decreasing_counts(self):
        # dual partition of the exponents: layer sizes weakly decrease
        hist = e8_height_histogram()
        counts = [hist[h] for h in sorted(hist)]
        assert counts == sorted(counts, reverse=True)
