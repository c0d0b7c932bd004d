"""Clifford layer: generator relations, normal form, symbolic vs matrix traces."""

import itertools
import random
from math import comb

import numpy as np
import pytest

from wresbd.clifford import (
    EXT_DIM,
    SPIN_DIM,
    CliffordElement,
    ext_degree_trace,
    ext_word_matrix,
    normal_form,
    rep_matrix,
    trace_ext,
    trace_spin,
    word_matrix,
)
from wresbd.ring import Scalar, reduce_unit_sphere

CE = CliffordElement

ALL_GENS = [("C", j) for j in range(1, 7)] + [("CH", j) for j in range(1, 7)]
C_GENS = ALL_GENS[:6]


class TestMatrixRelations:
    def test_spin_relations(self):
        gens = [rep_matrix(g, "spin") for g in C_GENS]
        eye = np.eye(SPIN_DIM)
        for i, a in enumerate(gens):
            assert np.allclose(a @ a, -eye)
            for b in gens[i + 1:]:
                assert np.allclose(a @ b + b @ a, 0)

    def test_ext_relations(self):
        cs = [rep_matrix(("C", j), "ext") for j in range(1, 7)]
        chs = [rep_matrix(("CH", j), "ext") for j in range(1, 7)]
        eye = np.eye(EXT_DIM)
        for i in range(6):
            assert np.allclose(cs[i] @ cs[i], -eye)
            assert np.allclose(chs[i] @ chs[i], eye)
            for k in range(6):
                # mixed pairs anticommute for every i, k -- including i == k
                assert np.allclose(cs[i] @ chs[k] + chs[k] @ cs[i], 0)
                if i != k:
                    assert np.allclose(cs[i] @ cs[k] + cs[k] @ cs[i], 0)
                    assert np.allclose(chs[i] @ chs[k] + chs[k] @ chs[i], 0)

    def test_spin_rejects_ch(self):
        with pytest.raises(ValueError):
            rep_matrix(("CH", 1), "spin")


class TestNormalForm:
    def test_squares(self):
        assert normal_form((("C", 3), ("C", 3))) == (-1, ())
        assert normal_form((("CH", 2), ("CH", 2))) == (1, ())

    def test_sorting_sign(self):
        sign, w = normal_form((("C", 2), ("C", 1)))
        assert sign == -1 and w == (("C", 1), ("C", 2))
        sign, w = normal_form((("CH", 1), ("C", 1)))
        assert sign == -1 and w == (("C", 1), ("CH", 1))

    def test_idempotent(self):
        rng = random.Random(7)
        for _ in range(200):
            word = tuple(rng.choice(ALL_GENS) for _ in range(rng.randint(0, 6)))
            sign, w = normal_form(word)
            assert normal_form(w) == (1, w)
            assert sign in (1, -1)

    def test_matches_matrices(self):
        # the sign convention must agree with the exterior representation
        rng = random.Random(11)
        for _ in range(150):
            word = tuple(rng.choice(ALL_GENS) for _ in range(rng.randint(1, 5)))
            sign, w = normal_form(word)
            assert np.allclose(word_matrix(word, "ext"),
                               sign * ext_word_matrix(w))


def _random_element(rng, gens, max_words=3, max_len=3):
    e = CE.zero()
    for _ in range(rng.randint(1, max_words)):
        word = [rng.choice(gens) for _ in range(rng.randint(0, max_len))]
        e = e + CE.word(word, rng.randint(-3, 3))
    return e


class TestTraces:
    def test_scalar_traces(self):
        assert trace_spin(CE.one()) == SPIN_DIM * Scalar.sym("DIMF")
        assert trace_ext(CE.one()) == EXT_DIM * Scalar.sym("DIMF")

    def test_nonscalar_words_traceless(self):
        for n in (1, 2, 3):
            for word in itertools.combinations(C_GENS, n):
                assert trace_spin(CE.word(word)).is_zero()
        assert trace_spin(CE.word([("C", 1), ("C", 1)])) == -SPIN_DIM * Scalar.sym("DIMF")

    def test_symbolic_vs_matrix_spin(self):
        # exhaustive over words of length <= 3 here; the acceptance test
        # pushes this to length 4
        env = {"DIMF": 1.0}
        for n in range(4):
            for word in itertools.product(C_GENS, repeat=n):
                sym = trace_spin(CE.word(word)).evaluate(env)
                mat = word_matrix(word, "spin").trace()
                assert abs(sym - mat) < 1e-9

    def test_symbolic_vs_matrix_ext_sampled(self):
        env = {"DIMF": 1.0}
        rng = random.Random(3)
        for _ in range(300):
            word = tuple(rng.choice(ALL_GENS) for _ in range(rng.randint(0, 4)))
            sym = trace_ext(CE.word(word)).evaluate(env)
            mat = word_matrix(word, "ext").trace()
            assert abs(sym - mat) < 1e-9

    def test_cyclicity(self):
        rng = random.Random(19)
        for _ in range(200):
            a = _random_element(rng, C_GENS)
            b = _random_element(rng, C_GENS)
            assert trace_spin(a * b) == trace_spin(b * a)
            ae = _random_element(rng, ALL_GENS)
            be = _random_element(rng, ALL_GENS)
            assert trace_ext(ae * be) == trace_ext(be * ae)

    def test_trace_spin_rejects_ch(self):
        with pytest.raises(ValueError):
            trace_spin(CE.ch(1))


class TestEndomorphisms:
    def test_commute_with_clifford_order_kept(self):
        a = CE.c(1) * CE.endo("Phi", 6)
        b = CE.endo("Phi", 6) * CE.c(1)
        assert a == b

    def test_product_order_preserved(self):
        ab = CE.endo("Phi", 1) * CE.endo("PhiStar", 2)
        ba = CE.endo("PhiStar", 2) * CE.endo("Phi", 1)
        assert ab != ba
        assert trace_spin(ab) == SPIN_DIM * Scalar.sym("T2:Phi:1:PhiStar:2")

    def test_three_endos_rejected(self):
        e = CE.endo("Phi", 1)
        with pytest.raises(ValueError):
            (e * e) * e

    def test_single_endo_trace(self):
        x = CE.word([("C", 6), ("C", 6)]) * CE.endo("Phi", 6)
        assert trace_spin(x) == -SPIN_DIM * Scalar.sym("T:Phi:6")
        assert trace_spin(CE.c(6) * CE.endo("Phi", 6)).is_zero()


def _c_prime():
    out = CE.zero()
    for j in range(1, 6):
        out = out + CE.c(j, Scalar.sym("XI%d" % j))
    return out


class TestGeometricIdentities:
    def test_c_prime_squares_to_minus_norm(self):
        cp = _c_prime()
        sq = cp * cp
        want = CE.scalar(-sum((Scalar.sym("XI%d" % j, 2) for j in range(1, 6)),
                              Scalar.zero()))
        assert sq == want

    def test_sandwich_identity(self):
        # c(xi') c(dx_n) c(xi') = |xi'|^2 c(dx_n)
        cp = _c_prime()
        lhs = cp * CE.c(6) * cp
        norm = sum((Scalar.sym("XI%d" % j, 2) for j in range(1, 6)), Scalar.zero())
        assert lhs == CE.c(6, norm)

    def test_trace_c_prime_squared_on_sphere(self):
        tr = trace_spin(_c_prime() * _c_prime())
        assert reduce_unit_sphere(tr) == -SPIN_DIM * Scalar.sym("DIMF")


class TestDegreewiseTraces:
    def test_binomial_pattern(self):
        # per-degree exterior traces of c(e_i) hat-c(e_i) c(e_6) hat-c(e_6)
        # follow C(4,m-2) + C(4,m) - 2 C(4,m-1); frozen from a direct
        # matrix computation
        def C(n, k):
            return comb(n, k) if 0 <= k <= n else 0

        for i in (1, 3, 5):
            word = (("C", i), ("CH", i), ("C", 6), ("CH", 6))
            got = [round(ext_degree_trace(word, m).real) for m in range(7)]
            assert got == [C(4, m - 2) + C(4, m) - 2 * C(4, m - 1) for m in range(7)]

    def test_pattern_sums_to_zero(self):
        word = (("C", 1), ("CH", 1), ("C", 6), ("CH", 6))
        total = sum(ext_degree_trace(word, m) for m in range(7))
        assert abs(total) < 1e-12
        assert trace_ext(CE.word(word)).is_zero()
