"""Exact scalar coefficient ring.

Scalars are finite sums  c * m  where c is a Gaussian rational (a + b*i with
a, b rational) and m is a monomial over a small fixed alphabet:

    H1      h'(0), the normal derivative of the collar metric factor at x_n=0
    DIMF    rank of the auxiliary flat bundle F
    OMEGA4  volume of the unit 4-sphere
    PI      the circle constant
    K       extrinsic curvature scalar (only after the final substitution)
    SH      square root of the collar factor h(x_n); bookkeeping symbol that
            carries normal derivatives, equal to 1 on the boundary
    XI1..XI5  tangential covariables
    T:fam:j   trace of a single endomorphism symbol (see clifford.py)
    T2:f1:j1:f2:j2  trace of an ordered product of two endomorphism symbols

Everything downstream (Clifford elements, rational symbols) keeps its
coefficients in this ring, so the whole pipeline is exact.
"""

from fractions import Fraction

__all__ = [
    "GRat",
    "Scalar",
    "XI_SYMBOLS",
    "sphere_moment",
    "reduce_unit_sphere",
    "sphere_integrate",
]

XI_SYMBOLS = ("XI1", "XI2", "XI3", "XI4", "XI5")

# display / sort order of the named symbols; trace symbols come after these,
# ordered lexicographically
_BASE_ORDER = ("PI", "H1", "K", "OMEGA4", "DIMF", "SH") + XI_SYMBOLS
_RANK = {s: i for i, s in enumerate(_BASE_ORDER)}


def _sym_rank(sym):
    r = _RANK.get(sym)
    if r is not None:
        return (0, r, "")
    return (1, 0, sym)


def _as_fraction(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError("expected int or Fraction, got %r" % (x,))


class GRat:
    """Gaussian rational a + b*i with exact Fraction parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = _as_fraction(re)
        self.im = _as_fraction(im)

    def __add__(self, other):
        other = _coerce(other)
        return GRat(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        return GRat(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        return GRat(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        n = other.re * other.re + other.im * other.im
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GRat(
            (self.re * other.re + self.im * other.im) / n,
            (self.im * other.re - self.re * other.im) / n,
        )

    def __neg__(self):
        return GRat(-self.re, -self.im)

    def __eq__(self, other):
        try:
            other = _coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def value(self):
        return complex(self.re, self.im)

    def __repr__(self):
        return "GRat(%s, %s)" % (self.re, self.im)

    def __str__(self):
        return _coeff_str(self)


GRat.I = GRat(0, 1)
GRat.ONE = GRat(1, 0)
GRat.ZERO = GRat(0, 0)


def _coerce(x):
    if isinstance(x, GRat):
        return x
    if isinstance(x, (int, Fraction)):
        return GRat(x, 0)
    raise TypeError("cannot coerce %r to GRat" % (x,))


def _frac_str(f):
    return str(f)  # Fraction renders as "p/q" or "p"


def _coeff_str(c):
    """Render a Gaussian rational: 3/4, -2, I, -1/2*I, (1+2*I)."""
    if c.im == 0:
        return _frac_str(c.re)
    if c.re == 0:
        if c.im == 1:
            return "I"
        if c.im == -1:
            return "-I"
        return "%s*I" % _frac_str(c.im)
    im = c.im
    if im == 1:
        ims = "I"
    elif im == -1:
        ims = "-I"
    else:
        ims = "%s*I" % _frac_str(im)
    if not ims.startswith("-"):
        return "(%s+%s)" % (_frac_str(c.re), ims)
    return "(%s%s)" % (_frac_str(c.re), ims)


def _mono_key(mono):
    return tuple((_sym_rank(s), e) for s, e in mono)


def _normalize_mono(pairs):
    acc = {}
    for s, e in pairs:
        if e == 0:
            continue
        acc[s] = acc.get(s, 0) + e
    items = [(s, e) for s, e in acc.items() if e != 0]
    items.sort(key=lambda p: _sym_rank(p[0]))
    return tuple(items)


class Scalar:
    """Exact polynomial over the coefficient alphabet with GRat coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for m, c in terms.items():
                c = _coerce(c)
                if c:
                    self.terms[m] = c

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def from_grat(cls, c):
        c = _coerce(c)
        return cls({(): c}) if c else cls()

    @classmethod
    def one(cls):
        return cls.from_grat(1)

    @classmethod
    def i(cls):
        return cls.from_grat(GRat.I)

    @classmethod
    def rational(cls, p, q=1):
        return cls.from_grat(Fraction(p, q))

    @classmethod
    def sym(cls, name, exp=1, coeff=1):
        return cls({_normalize_mono([(name, exp)]): _coerce(coeff)})

    # -- ring operations ----------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m)
            v = c if v is None else v + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        s = Scalar.__new__(Scalar)
        s.terms = out
        return s

    __radd__ = __add__

    def __neg__(self):
        s = Scalar.__new__(Scalar)
        s.terms = {m: -c for m, c in self.terms.items()}
        return s

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _normalize_mono(list(m1) + list(m2))
                c = c1 * c2
                v = out.get(m)
                v = c if v is None else v + c
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
        s = Scalar.__new__(Scalar)
        s.terms = out
        return s

    __rmul__ = __mul__

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
        if isinstance(x, Scalar):
            return x
        if isinstance(x, (int, Fraction, GRat)):
            return Scalar.from_grat(x)
        raise TypeError("cannot coerce %r to Scalar" % (x,))

    # -- calculus helpers ----------------------------------------------

    def d_xn(self):
        """Normal derivative at the boundary point.

        Each power of SH carries half a unit of H1 (SH = sqrt(h), and
        h'(0) = H1 with h(0) = 1); every other symbol is constant in x_n.
        """
        out = Scalar.zero()
        for m, c in self.terms.items():
            k = dict(m).get("SH", 0)
            if k:
                out = out + Scalar({_normalize_mono(list(m) + [("H1", 1)]):
                                    c * Fraction(k, 2)})
        return out

    def d_xi(self, j):
        """Partial derivative in the tangential covariable XIj (j in 1..5)."""
        name = "XI%d" % j
        out = Scalar.zero()
        for m, c in self.terms.items():
            e = dict(m).get(name, 0)
            if e:
                m2 = _normalize_mono([(s, x) if s != name else (s, x - 1)
                                      for s, x in m])
                out = out + Scalar({m2: c * e})
        return out

    def substitute(self, mapping):
        """Replace symbols by Scalars (other symbols pass through)."""
        out = Scalar.zero()
        for m, c in self.terms.items():
            term = Scalar.from_grat(c)
            for s, e in m:
                if s in mapping:
                    rep = Scalar._coerce(mapping[s])
                    for _ in range(e):
                        term = term * rep
                else:
                    term = term * Scalar.sym(s, e)
            out = out + term
        return out

    def xi_degree_of(self, mono):
        return sum(e for s, e in mono if s in XI_SYMBOLS)

    def evaluate(self, assignment):
        """Numeric value given symbol -> number (must cover all symbols)."""
        total = 0j
        for m, c in self.terms.items():
            v = c.value()
            for s, e in m:
                v *= assignment[s] ** e
            total += v
        return total

    def to_xi_poly(self, assignment):
        """Collect into a polynomial in XI1..XI5 with numeric coefficients.

        Returns dict mapping a 5-tuple of exponents to a complex number.
        Non-XI symbols are looked up in `assignment`.
        """
        poly = {}
        for m, c in self.terms.items():
            exps = [0] * 5
            v = c.value()
            for s, e in m:
                if s in XI_SYMBOLS:
                    exps[XI_SYMBOLS.index(s)] = e
                else:
                    v *= assignment[s] ** e
            key = tuple(exps)
            poly[key] = poly.get(key, 0j) + v
        return {k: v for k, v in poly.items() if v != 0}

    # -- rendering ------------------------------------------------------

    def render(self):
        """Canonical text form, e.g. '-15/16*PI*H1*OMEGA4*DIMF'."""
        if not self.terms:
            return "0"
        monos = sorted(self.terms, key=_mono_key)
        parts = []
        for m in monos:
            c = self.terms[m]
            cs = _coeff_str(c)
            factors = []
            for s, e in m:
                factors.append(s if e == 1 else "%s**%d" % (s, e))
            if factors:
                if cs == "1":
                    body = "*".join(factors)
                elif cs == "-1":
                    body = "-" + "*".join(factors)
                else:
                    body = cs + "*" + "*".join(factors)
            else:
                body = cs
            parts.append(body)
        out = parts[0]
        for p in parts[1:]:
            if p.startswith("-"):
                out += " - " + p[1:]
            else:
                out += " + " + p
        return out

    def __repr__(self):
        return "Scalar(%s)" % self.render()

    __str__ = render


def _double_factorial(n):
    r = 1
    while n > 1:
        r *= n
        n -= 2
    return r


def sphere_moment(exps):
    """Exact moment of a XI-monomial over the unit 4-sphere, in units of
    the sphere volume: integral of prod xi_j^(e_j) dsigma = moment * OMEGA4.

    Zero when any exponent is odd; for exponents 2a_j the value is
    prod (2a_j - 1)!! / prod_{m=1..A} (3 + 2m) with A = sum a_j.
    """
    if any(e % 2 for e in exps):
        return Fraction(0)
    num = 1
    a_total = 0
    for e in exps:
        num *= _double_factorial(e - 1)
        a_total += e // 2
    den = 1
    for m in range(1, a_total + 1):
        den *= 3 + 2 * m
    return Fraction(num, den)


def reduce_unit_sphere(s):
    """Normal form modulo the unit-sphere relation XI1^2+...+XI5^2 = 1.

    Rewrites XI5^2 -> 1 - XI1^2 - XI2^2 - XI3^2 - XI4^2 until the XI5
    exponent is at most 1 everywhere.  Only meaningful after restriction
    to the boundary sphere (SH already set to 1).
    """
    rep = Scalar.one()
    for name in XI_SYMBOLS[:4]:
        rep = rep - Scalar.sym(name, 2)
    out = Scalar.zero()
    work = [(m, c) for m, c in s.terms.items()]
    while work:
        m, c = work.pop()
        e5 = dict(m).get("XI5", 0)
        if e5 < 2:
            out = out + Scalar({m: c})
            continue
        rest = [(sym, x) for sym, x in m if sym != "XI5"]
        if e5 - 2:
            rest.append(("XI5", e5 - 2))
        base = Scalar({_normalize_mono(rest): c}) * rep
        work.extend(base.terms.items())
    return out


def sphere_integrate(s):
    """Integrate a Scalar over the unit sphere in the tangential covariables.

    XI-monomials are replaced by their exact moments times OMEGA4; all
    other symbols pass through as spectators.  The input is reduced to the
    sphere normal form first, so it may contain arbitrary XI5 powers.
    """
    s = reduce_unit_sphere(s)
    out = Scalar.zero()
    for m, c in s.terms.items():
        exps = [0] * 5
        rest = []
        for sym, e in m:
            if sym in XI_SYMBOLS:
                exps[XI_SYMBOLS.index(sym)] = e
            else:
                rest.append((sym, e))
        mom = sphere_moment(exps)
        if mom == 0:
            continue
        rest.append(("OMEGA4", 1))
        out = out + Scalar({_normalize_mono(rest): c * mom})
    return out
