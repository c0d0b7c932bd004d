"""Clifford algebra elements with endomorphism symbols.

Two anticommuting families of generators over a 6-dimensional space:

    ('C', j)    c(e_j),      c(e_j)^2 = -1
    ('CH', j)   hat-c(e_j),  hat-c(e_j)^2 = +1

Distinct generators anticommute, including every mixed pair c(e_i) hat-c(e_j)
(also for i = j).  Words are kept in a canonical sorted order (all C's before
all CH's, each by index) with signs tracked by the bubble normal form.

Elements may carry a short word of formal bundle endomorphisms ('fam', j) --
the connection-form symbols of the twisting bundle.  These commute with the
Clifford generators but not with each other; at most two survive any product
that the residue computation needs, so longer endomorphism words are an
error.  Traces of endomorphism words stay symbolic: T:fam:j for one factor,
T2:f1:j1:f2:j2 for an ordered pair, DIMF for the empty word.

Matrix representations are provided for cross-checking every symbolic rule:
an 8x8 spin representation (C generators only) and the 64x64 exterior
representation where C acts as wedge-minus-contraction and CH as
wedge-plus-contraction.
"""

from fractions import Fraction
from functools import lru_cache

import numpy as np

from .ring import GRat, Scalar

__all__ = [
    "CliffordElement",
    "normal_form",
    "trace_spin",
    "trace_ext",
    "rep_matrix",
    "word_matrix",
    "ext_word_matrix",
    "ext_degree_trace",
    "SPIN_DIM",
    "EXT_DIM",
]

SPIN_DIM = 8
EXT_DIM = 64


def _gkey(g):
    kind, j = g
    return (0 if kind == "C" else 1, j)


def _check_gen(g):
    if (
        not isinstance(g, tuple)
        or len(g) != 2
        or g[0] not in ("C", "CH")
        or not 1 <= g[1] <= 6
    ):
        raise ValueError("bad Clifford generator %r" % (g,))


def normal_form(word):
    """Sort a generator word, tracking the anticommutation sign.

    Returns (sign, canonical_word).  Repeated generators contract via
    c^2 = -1 / hat-c^2 = +1.  sign is +1 or -1.
    """
    sign = 1
    out = []
    for g in word:
        _check_gen(g)
        pos = len(out)
        while pos > 0 and _gkey(out[pos - 1]) > _gkey(g):
            pos -= 1
            sign = -sign
        if pos > 0 and out[pos - 1] == g:
            out.pop(pos - 1)
            if g[0] == "C":
                sign = -sign
        else:
            out.insert(pos, g)
    return sign, tuple(out)


def _coerce_scalar(x):
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Fraction, GRat)):
        return Scalar.from_grat(x)
    raise TypeError("cannot use %r as a coefficient" % (x,))


class CliffordElement:
    """Linear combination of (clifford word, endomorphism word) pairs."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for k, c in terms.items():
                c = _coerce_scalar(c)
                if not c.is_zero():
                    self.terms[k] = c

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def scalar(cls, c):
        c = _coerce_scalar(c)
        return cls({((), ()): c})

    @classmethod
    def one(cls):
        return cls.scalar(1)

    @classmethod
    def gen(cls, kind, j, coeff=1):
        _check_gen((kind, j))
        return cls({(((kind, j),), ()): _coerce_scalar(coeff)})

    @classmethod
    def c(cls, j, coeff=1):
        return cls.gen("C", j, coeff)

    @classmethod
    def ch(cls, j, coeff=1):
        return cls.gen("CH", j, coeff)

    @classmethod
    def endo(cls, fam, j, coeff=1):
        return cls({((), ((fam, j),)): _coerce_scalar(coeff)})

    @classmethod
    def word(cls, gens, coeff=1):
        sign, w = normal_form(tuple(gens))
        return cls({(w, ()): _coerce_scalar(coeff) * sign})

    # -- algebra ----------------------------------------------------------

    def _add_term(self, out, key, coeff):
        v = out.get(key)
        v = coeff if v is None else v + coeff
        if v.is_zero():
            out.pop(key, None)
        else:
            out[key] = v

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            self._add_term(out, k, c)
        r = CliffordElement.__new__(CliffordElement)
        r.terms = out
        return r

    __radd__ = __add__

    def __neg__(self):
        r = CliffordElement.__new__(CliffordElement)
        r.terms = {k: -c for k, c in self.terms.items()}
        return r

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GRat, Scalar)):
            c0 = _coerce_scalar(other)
            r = CliffordElement.__new__(CliffordElement)
            r.terms = {}
            for k, c in self.terms.items():
                v = c * c0
                if not v.is_zero():
                    r.terms[k] = v
            return r
        other = self._coerce(other)
        out = {}
        for (w1, e1), c1 in self.terms.items():
            for (w2, e2), c2 in other.terms.items():
                endo = e1 + e2
                if len(endo) > 2:
                    raise ValueError(
                        "endomorphism word of length %d; the residue "
                        "computation never needs more than two factors" % len(endo)
                    )
                sign, w = normal_form(w1 + w2)
                c = c1 * c2
                if sign < 0:
                    c = -c
                self._add_term(out, (w, endo), c)
        r = CliffordElement.__new__(CliffordElement)
        r.terms = out
        return r

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, GRat, Scalar)):
            return self * other
        return self._coerce(other) * self

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self):
        return not self.terms

    @staticmethod
    def _coerce(x):
        if isinstance(x, CliffordElement):
            return x
        if isinstance(x, (int, Fraction, GRat, Scalar)):
            return CliffordElement.scalar(x)
        raise TypeError("cannot coerce %r to CliffordElement" % (x,))

    def map_scalars(self, f):
        """Apply f to every coefficient; drops terms that map to zero."""
        out = {}
        for k, c in self.terms.items():
            v = f(c)
            if not v.is_zero():
                out[k] = v
        r = CliffordElement.__new__(CliffordElement)
        r.terms = out
        return r

    def has_ch(self):
        return any(g[0] == "CH" for w, _ in self.terms for g in w)

    def __repr__(self):
        if not self.terms:
            return "CliffordElement(0)"
        bits = []
        for (w, e) in sorted(self.terms, key=lambda k: (len(k[0]), k)):
            c = self.terms[(w, e)]
            gens = ".".join("%s%d" % (("c" if kind == "C" else "ch"), j) for kind, j in w)
            endo = ".".join("%s(%s)" % (fam, j) for fam, j in e)
            name = ".".join(x for x in (gens, endo) if x) or "1"
            bits.append("[%s]*(%s)" % (name, c.render()))
        return "CliffordElement(%s)" % " + ".join(bits)


def _endo_trace_scalar(endo):
    if not endo:
        return Scalar.sym("DIMF")
    if len(endo) == 1:
        fam, j = endo[0]
        return Scalar.sym("T:%s:%d" % (fam, j))
    (f1, j1), (f2, j2) = endo
    return Scalar.sym("T2:%s:%d:%s:%d" % (f1, j1, f2, j2))


def trace_spin(elt):
    """Trace over the 8-dimensional spin module tensored with F.

    Reduced nonempty words are traceless in the spin representation, so
    only the scalar part survives, weighted by 8 and by the symbolic trace
    of the endomorphism word.  Rejects elements containing CH generators,
    which do not act on the spin module.
    """
    if elt.has_ch():
        raise ValueError("CH generators have no spin representation")
    out = Scalar.zero()
    for (w, endo), c in elt.terms.items():
        if w:
            continue
        out = out + c * SPIN_DIM * _endo_trace_scalar(endo)
    return out


def trace_ext(elt):
    """Trace over the 64-dimensional exterior module tensored with F.

    Word traces are taken literally from the exterior matrices (they are
    integers); the endomorphism word contributes its symbolic trace.
    """
    out = Scalar.zero()
    for (w, endo), c in elt.terms.items():
        t = int(round(ext_word_matrix(w).trace().real))
        if t:
            out = out + c * t * _endo_trace_scalar(endo)
    return out


# -- matrix representations ------------------------------------------------

_PAULI1 = np.array([[0, 1], [1, 0]], dtype=complex)
_PAULI2 = np.array([[0, -1j], [1j, 0]], dtype=complex)
_PAULI3 = np.array([[1, 0], [0, -1]], dtype=complex)
_ID2 = np.eye(2, dtype=complex)


@lru_cache(maxsize=None)
def _spin_gens():
    gens = []
    for k in range(3):
        for pauli in (_PAULI1, _PAULI2):
            mats = [_PAULI3] * k + [1j * pauli] + [_ID2] * (2 - k)
            m = mats[0]
            for x in mats[1:]:
                m = np.kron(m, x)
            gens.append(m)
    return tuple(gens)


@lru_cache(maxsize=None)
def _ext_gens():
    """c(e_j) = wedge - contraction, hat-c(e_j) = wedge + contraction."""
    cs, chs = [], []
    for j in range(6):
        eps = np.zeros((EXT_DIM, EXT_DIM), dtype=complex)
        iot = np.zeros((EXT_DIM, EXT_DIM), dtype=complex)
        for s in range(EXT_DIM):
            if not s & (1 << j):
                sign = (-1) ** bin(s & ((1 << j) - 1)).count("1")
                eps[s | (1 << j), s] = sign
                iot[s, s | (1 << j)] = sign
        cs.append(eps - iot)
        chs.append(eps + iot)
    return tuple(cs), tuple(chs)


def rep_matrix(gen, rep):
    """Matrix of one generator: rep is 'spin' (8x8) or 'ext' (64x64)."""
    _check_gen(gen)
    kind, j = gen
    if rep == "spin":
        if kind == "CH":
            raise ValueError("CH generators have no spin representation")
        return _spin_gens()[j - 1]
    if rep == "ext":
        cs, chs = _ext_gens()
        return cs[j - 1] if kind == "C" else chs[j - 1]
    raise ValueError("unknown representation %r" % (rep,))


def word_matrix(word, rep):
    dim = SPIN_DIM if rep == "spin" else EXT_DIM
    m = np.eye(dim, dtype=complex)
    for g in word:
        m = m @ rep_matrix(g, rep)
    return m


@lru_cache(maxsize=None)
def _ext_word_matrix_cached(word):
    return word_matrix(word, "ext")


def ext_word_matrix(word):
    return _ext_word_matrix_cached(tuple(word))


def ext_degree_trace(word, degree):
    """Trace of a word's exterior matrix restricted to forms of one degree."""
    m = ext_word_matrix(word)
    idx = [s for s in range(EXT_DIM) if bin(s).count("1") == degree]
    return complex(m[idx, idx].sum())
