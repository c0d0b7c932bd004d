"""Independent numeric cross-check of the exact boundary computation.

The oracle evaluates every boundary case with numeric machinery that
bypasses the exact engine's algebraic rules at each stage where the
engine does something nontrivial:

* Clifford products and traces: literal representation matrices
  (8x8 spin / 64x64 exterior) instead of the symbolic normal form;
* twisting endomorphisms: concrete random matrices on a model fibre,
  so endomorphism trace symbols become plain numbers;
* the xi_n line integral: adaptive quadrature over the real line
  instead of the residue formula;
* the sphere integral: the Gamma-function moment formula instead of
  the engine's double-factorial moment table.

Symbol construction (catalog, derivatives, restriction, half-line
projection) is shared with the engine; each of those stages is validated
separately against published forms and analytic identities.  Agreement
here therefore checks the trace, line-integral and sphere-integral
stages end to end on the same symbol data.
"""

import math
from functools import lru_cache

import numpy as np
from scipy.integrate import quad

from .boundary import CASES, case_factor_pairs
from .catalog import FAMILIES
from .clifford import word_matrix

__all__ = ["OracleAssignment", "oracle_case", "sphere_moment_numeric"]

_ALL_ENDO_FAMS = ("sigmaF", "Phi", "PhiStar", "sigmaFe", "w", "wStar")


class OracleAssignment:
    """Seeded numeric values for every free symbol of the computation.

    The twisting endomorphisms are drawn as concrete dimF x dimF real
    matrices; their traces (and pair traces) supply the values of the
    corresponding trace symbols, so the exact result and the numeric
    result are evaluated at one consistent data point.
    """

    def __init__(self, seed):
        rng = np.random.default_rng(seed)
        self.seed = seed
        self.h1 = float(rng.uniform(0.5, 2.0))
        self.dimf = int(rng.integers(1, 3))
        self.endos = {
            (fam, j): rng.uniform(-1.0, 1.0, (self.dimf, self.dimf))
            for fam in _ALL_ENDO_FAMS for j in range(1, 7)
        }
        env = {
            "PI": math.pi,
            "OMEGA4": 8 * math.pi ** 2 / 3,
            "H1": self.h1,
            "K": -2.5 * self.h1,
            "DIMF": float(self.dimf),
            "SH": 1.0,
        }
        for (fam, j), m in self.endos.items():
            env["T:%s:%d" % (fam, j)] = float(np.trace(m))
        for (f1, j1), m1 in self.endos.items():
            for (f2, j2), m2 in self.endos.items():
                env["T2:%s:%d:%s:%d" % (f1, j1, f2, j2)] = \
                    float(np.trace(m1 @ m2))
        self.env = env

    def endo_trace(self, word):
        """Numeric fibre trace of a product of endomorphism symbols."""
        if not word:
            return float(self.dimf)
        m = np.eye(self.dimf)
        for fam, j in word:
            m = m @ self.endos[(fam, j)]
        return float(np.trace(m))


@lru_cache(maxsize=None)
def _wmat(word, rep):
    return np.asarray(word_matrix(word, rep), dtype=complex)


def sphere_moment_numeric(exps):
    """Integral of XI1^a1 * ... * XI5^a5 over the unit 4-sphere.

    Gamma-function formula for monomial moments on S^{d-1} in R^5:
    zero if any exponent is odd, otherwise
    2 * prod Gamma((a_i+1)/2) / Gamma(sum (a_i+1)/2).
    """
    if any(a % 2 for a in exps):
        return 0.0
    num = 2.0
    for a in exps:
        num *= math.gamma((a + 1) / 2.0)
    return num / math.gamma(sum(a + 1 for a in exps) / 2.0)


def _pair_integrand_polys(fsym, ssym, rep, assignment):
    """Numeric trace of the factor product, as rational data in xi_n.

    Returns a dict mapping the pole key (A, B) -- denominator
    (xi_n - i)^A (xi_n + i)^B -- to a dict mapping an XI-monomial
    exponent tuple to the list of numeric xi_n-polynomial coefficients.
    """
    out = {}
    for k1, p1 in fsym.terms.items():
        for k2, p2 in ssym.terms.items():
            key = (k1[0] + k2[0], k1[1] + k2[1])
            bucket = out.setdefault(key, {})
            for i1, c1 in enumerate(p1):
                if c1.is_zero():
                    continue
                for i2, c2 in enumerate(p2):
                    if c2.is_zero():
                        continue
                    deg = i1 + i2
                    for (w1, e1), s1 in c1.terms.items():
                        for (w2, e2), s2 in c2.terms.items():
                            tc = np.trace(_wmat(w1, rep) @ _wmat(w2, rep))
                            if abs(tc) < 1e-14:
                                continue
                            te = assignment.endo_trace(e1 + e2)
                            if te == 0.0:
                                continue
                            coeff = s1 * s2
                            for mono, val in coeff.to_xi_poly(
                                    assignment.env).items():
                                poly = bucket.setdefault(mono, [])
                                if len(poly) <= deg:
                                    poly.extend(
                                        0j for _ in range(deg + 1 - len(poly)))
                                poly[deg] += val * tc * te
    return out


def _line_integral_numeric(poly, key):
    """Adaptive quadrature of poly(xi_n) / ((xi_n-i)^A (xi_n+i)^B)."""
    a_pow, b_pow = key
    coeffs = list(reversed(poly))  # np.polyval convention

    def f(x, part):
        den = (x - 1j) ** a_pow * (x + 1j) ** b_pow
        v = np.polyval(coeffs, x) / den
        return v.real if part == 0 else v.imag

    re, _ = quad(f, -np.inf, np.inf, args=(0,), epsabs=1e-12,
                 epsrel=1e-12, limit=400)
    im, _ = quad(f, -np.inf, np.inf, args=(1,), epsabs=1e-12,
                 epsrel=1e-12, limit=400)
    return re + 1j * im


def oracle_case(family, case, assignment):
    """Numeric value of one boundary case, with per-block breakdown.

    Returns (blocks, total) where blocks maps block name to a complex
    number and total is their sum; directly comparable to the exact
    CaseResult evaluated at the same assignment.
    """
    family = FAMILIES[family] if isinstance(family, str) else family
    pref = complex(case.prefactor().evaluate(assignment.env))
    blocks = {}
    for name, pairs in case_factor_pairs(family, case).items():
        acc = 0j
        for fsym, ssym in pairs:
            data = _pair_integrand_polys(fsym, ssym, family.rep, assignment)
            for key, monos in data.items():
                for mono, poly in monos.items():
                    moment = sphere_moment_numeric(mono)
                    if moment == 0.0:
                        continue
                    acc += moment * _line_integral_numeric(poly, key)
        blocks[name] = pref * acc
    return blocks, sum(blocks.values())
