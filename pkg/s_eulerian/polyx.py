"""Exact polynomial arithmetic and certified real root analysis.

Univariate polynomials are sympy ``Poly`` objects over ZZ or QQ in a
thin ExactPoly wrapper, so nothing is ever rounded. Real roots are
counted with Sturm sequences of modified subresultants, isolated with
rational endpoints, and compared through the root counting functions

    n_f(x0) = number of roots of f in [x0, oo), with multiplicity,

which decide interlacing and compatibility of real-rooted polynomials.
"""

# Built-in imports
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb
import itertools
import logging

# 3rd-party imports
import sympy
from sympy.polys.polyerrors import ExactQuotientFailed
from sympy.polys.subresultants_qq_zz import sturm_pg

logger = logging.getLogger(__name__)

X = sympy.Symbol('x')
"""The variable of every ExactPoly."""


class ZeroPolynomialError(ValueError):
    """Raised when a root question is asked of the zero polynomial."""


class NotRealRootedError(ValueError):
    """Raised when interlacing or compatibility is asked of a
    polynomial with non-real roots."""


class NotPalindromicError(ValueError):
    """Raised when a gamma expansion is asked of a non-palindromic
    polynomial."""


def _as_number(value):
    if isinstance(value, bool):
        raise TypeError('booleans are not polynomial coefficients')
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f'coefficients should be int, Fraction or str,'
                    f' not {type(value)}.')


def _to_sympy(value):
    value = Fraction(value)
    return sympy.Rational(value.numerator, value.denominator)


def _to_fraction(value):
    """A sympy Integer or Rational as a Fraction."""
    return Fraction(int(value.p), int(value.q))


def _sign(value):
    return 1 if value > 0 else -1 if value < 0 else 0


class ExactPoly:
    """
    Univariate polynomial in x with exact integer or rational
    coefficients, backed by a sympy Poly over ZZ or QQ.

    ExactPoly objects are immutable. The zero polynomial has no
    coefficients and degree -1. Coefficient tuples, lowest degree
    first, are read off the Poly on demand.
    """
    __slots__ = ('__poly', '__coeffs')

    def __init__(self, coeffs=(), rational=None):
        """
        Parameters
        ----------
        coeffs : iterable of int, Fraction or str
            Coefficients c_0, c_1, ... of 1, x, x^2, ...
        rational : bool or None
            Record the coefficient ring as the rationals. When None the
            ring is the integers unless some coefficient is not an
            integer.
        """
        values = [_as_number(c) for c in coeffs]
        while values and values[-1] == 0:
            values.pop()
        fractional = any(isinstance(c, Fraction) and c.denominator != 1
                         for c in values)
        if rational is None:
            rational = fractional
        elif not rational and fractional:
            raise ValueError('non-integer coefficient in an integer'
                             ' polynomial')
        domain = sympy.QQ if rational else sympy.ZZ
        self.__poly = sympy.Poly([_to_sympy(c) for c in reversed(values)]
                                 or [0], X, domain=domain)
        self.__coeffs = None

    @classmethod
    def from_poly(cls, poly, retract=False):
        """
        Wrap a sympy polynomial in x.

        Parameters
        ----------
        poly : sympy.Poly or sympy expression
            Coefficients in ZZ or QQ.
        retract : bool
            Move to the integer ring when every coefficient is an
            integer. Otherwise the domain of poly is kept.

        Returns
        -------
        f : ExactPoly
        """
        poly = sympy.Poly(poly, X)
        if retract:
            poly = poly.retract()
        domain = poly.get_domain()
        if not (domain.is_ZZ or domain.is_QQ):
            raise ValueError(f'coefficients should lie in ZZ or QQ,'
                             f' not {domain}')
        result = cls.__new__(cls)
        result.__poly = poly
        result.__coeffs = None
        return result

    @classmethod
    def monomial(cls, degree, coefficient=1):
        """The polynomial coefficient * x^degree."""
        if degree < 0:
            raise ValueError(f'monomial degree should be >= 0, not {degree}.')
        return cls([0] * degree + [coefficient])

    @classmethod
    def from_roots(cls, roots, leading=1):
        """The polynomial leading * prod (x - r) over the given roots."""
        result = cls([leading])
        for root in roots:
            result = result * cls([-Fraction(root), 1])
        return cls.from_poly(result.poly, retract=True)

    @classmethod
    def from_json(cls, payload):
        """Build a polynomial from its {"variable": "x", "coeffs": [...]}
        form."""
        if payload.get('variable', 'x') != 'x':
            raise ValueError('only polynomials in x are supported')
        return cls([Fraction(c) for c in payload['coeffs']])

    @property
    def poly(self):
        """The underlying sympy Poly."""
        return self.__poly

    @property
    def coeffs(self):
        if self.__coeffs is None:
            if self.__poly.is_zero:
                self.__coeffs = ()
            else:
                convert = _to_fraction if self.rational else int
                self.__coeffs = tuple(convert(c) for c in
                                      reversed(self.__poly.all_coeffs()))
        return self.__coeffs

    @property
    def rational(self):
        return self.__poly.get_domain().is_QQ

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def is_zero(self):
        return self.__poly.is_zero

    @property
    def leading(self):
        if self.is_zero:
            return 0
        return self.coeffs[-1]

    @property
    def low_degree(self):
        """Exponent of the lowest nonzero term, -1 for zero."""
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        return -1

    def coefficient(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    @staticmethod
    def _coerce(other):
        if isinstance(other, ExactPoly):
            return other
        return ExactPoly([other])

    def __add__(self, other):
        return ExactPoly.from_poly(self.__poly + self._coerce(other).poly)

    __radd__ = __add__

    def __neg__(self):
        return ExactPoly.from_poly(-self.__poly)

    def __sub__(self, other):
        return ExactPoly.from_poly(self.__poly - self._coerce(other).poly)

    def __rsub__(self, other):
        return ExactPoly.from_poly(self._coerce(other).poly - self.__poly)

    def __mul__(self, other):
        return ExactPoly.from_poly(self.__poly * self._coerce(other).poly)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if exponent < 0:
            raise ValueError('negative powers are not polynomials')
        return ExactPoly.from_poly(self.__poly**exponent)

    def __eq__(self, other):
        if isinstance(other, ExactPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == ExactPoly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, x):
        """Evaluate exactly by Horner's rule; x is an int or Fraction."""
        value = 0
        for c in reversed(self.coeffs):
            value = value * x + c
        return value

    def __repr__(self):
        return f'ExactPoly({[str(c) for c in self.coeffs]})'

    def __str__(self):
        if self.is_zero:
            return '0'
        pieces = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = '-' if c < 0 else '+'
            magnitude = abs(c)
            if i == 0:
                body = str(magnitude)
            else:
                prefix = '' if magnitude == 1 else str(magnitude)
                power = 'x' if i == 1 else f'x^{i}'
                body = prefix + power
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        text = ('-' if first_sign == '-' else '') + first_body
        for sign, body in pieces[1:]:
            text += f' {sign} {body}'
        return text

    def derivative(self):
        return ExactPoly.from_poly(self.__poly.diff(X))

    def scale_x(self, c):
        """Substitute x -> c*x."""
        c = _as_number(c)
        return ExactPoly.from_poly(self.__poly.compose(
            sympy.Poly(_to_sympy(c) * X, X)))

    def shift(self, k):
        """Multiply by x^k."""
        return ExactPoly.from_poly(self.__poly * sympy.Poly(X**k, X))

    def divmod(self, other):
        """Exact long division over the rationals.

        Returns
        -------
        quotient, remainder : ExactPoly
            With self = quotient * other + remainder and
            deg remainder < deg other.
        """
        if other.is_zero:
            raise ZeroDivisionError('polynomial division by zero')
        quotient, remainder = self.__poly.div(other.poly)
        return (ExactPoly.from_poly(quotient, retract=True),
                ExactPoly.from_poly(remainder, retract=True))

    def exact_div(self, other):
        """Divide by a polynomial that is known to divide self."""
        if other.is_zero:
            raise ZeroDivisionError('polynomial division by zero')
        try:
            quotient = self.__poly.exquo(other.poly)
        except ExactQuotientFailed:
            raise ValueError(f'{other} does not divide {self}') from None
        return ExactPoly.from_poly(quotient, retract=True)

    def quo_scalar(self, b):
        """Divide every integer coefficient by b, which must divide it."""
        try:
            return ExactPoly.from_poly(self.__poly.exquo_ground(b))
        except ExactQuotientFailed:
            raise ValueError(f'{b} does not divide every coefficient'
                             f' of {self}') from None

    def primitive_part(self):
        """Integer polynomial with coprime coefficients and positive
        leading coefficient, a rational multiple of self."""
        if self.is_zero:
            return self
        _, poly = self.__poly.clear_denoms(convert=True)
        _, poly = poly.primitive()
        if poly.LC() < 0:
            poly = -poly
        return ExactPoly.from_poly(poly)

    def is_palindromic(self):
        """True when h(x) = x^deg(h) h(1/x), so the coefficient list,
        constant term included, reads the same in both directions."""
        return self.coeffs == self.coeffs[::-1]

    def to_json(self):
        return {'variable': 'x', 'coeffs': [str(c) for c in self.coeffs]}


class PQPoly:
    """
    Polynomial in x whose coefficients are Laurent polynomials in p and
    q with integer coefficients.

    Terms are kept in a dictionary from (x exponent, p exponent,
    q exponent) to a nonzero integer. The x exponent is never
    negative.
    """
    __slots__ = ('__terms',)

    def __init__(self, terms=None):
        collected = {}
        for key, c in (terms or {}).items():
            a, pe, qe = (int(v) for v in key)
            if a < 0:
                raise ValueError(f'negative x exponent {a} in PQPoly')
            if not isinstance(c, int) or isinstance(c, bool):
                raise TypeError(f'PQPoly coefficients should be int,'
                                f' not {type(c)}.')
            collected[(a, pe, qe)] = collected.get((a, pe, qe), 0) + c
        self.__terms = {k: v for k, v in collected.items() if v != 0}

    @classmethod
    def monomial(cls, x=0, p=0, q=0, c=1):
        return cls({(x, p, q): c})

    @classmethod
    def from_exact(cls, poly):
        """Embed an integer ExactPoly (p and q exponents 0)."""
        if poly.rational:
            raise ValueError('only integer polynomials embed in PQPoly')
        return cls({(i, 0, 0): c for i, c in enumerate(poly.coeffs)})

    @property
    def terms(self):
        return dict(self.__terms)

    @property
    def is_zero(self):
        return not self.__terms

    @property
    def x_degree(self):
        if self.is_zero:
            return -1
        return max(a for a, _, _ in self.__terms)

    def min_exponent(self, variable):
        """Smallest exponent of 'p' or 'q' over all terms."""
        index = {'x': 0, 'p': 1, 'q': 2}[variable]
        if self.is_zero:
            return 0
        return min(key[index] for key in self.__terms)

    def items(self):
        return sorted(self.__terms.items())

    def __add__(self, other):
        if other == 0:
            return self
        terms = dict(self.__terms)
        for key, c in other.terms.items():
            terms[key] = terms.get(key, 0) + c
        return PQPoly(terms)

    __radd__ = __add__

    def __neg__(self):
        return PQPoly({k: -c for k, c in self.__terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return PQPoly({k: c * other for k, c in self.__terms.items()})
        product = {}
        for (a1, p1, q1), c1 in self.__terms.items():
            for (a2, p2, q2), c2 in other.terms.items():
                key = (a1 + a2, p1 + p2, q1 + q2)
                product[key] = product.get(key, 0) + c1 * c2
        return PQPoly(product)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, PQPoly):
            return self.__terms == other.terms
        if other == 0:
            return self.is_zero
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.__terms.items()))

    def __repr__(self):
        return f'PQPoly({self.items()})'

    def __str__(self):
        if self.is_zero:
            return '0'
        pieces = []
        for (a, pe, qe), c in self.items():
            factors = []
            for name, e in (('x', a), ('q', qe), ('p', pe)):
                if e == 1:
                    factors.append(name)
                elif e != 0:
                    factors.append(f'{name}^{e}')
            body = '*'.join(factors)
            if not body:
                pieces.append(str(c))
            elif c == 1:
                pieces.append(body)
            elif c == -1:
                pieces.append('-' + body)
            else:
                pieces.append(f'{c}*{body}')
        return ' + '.join(pieces)

    def times_monomial(self, x=0, p=0, q=0, c=1):
        return PQPoly({(a + x, pe + p, qe + q): v * c
                       for (a, pe, qe), v in self.__terms.items()})

    def substitute_xq(self, k=1):
        """Substitute x -> x*q^k, an exponent shift on every term."""
        return PQPoly({(a, pe, qe + k * a): c
                       for (a, pe, qe), c in self.__terms.items()})

    def transform(self, mapping):
        """Re-key every term through mapping(a, pe, qe) -> (a, pe, qe),
        adding coefficients that collide."""
        terms = {}
        for (a, pe, qe), c in self.__terms.items():
            key = mapping(a, pe, qe)
            terms[key] = terms.get(key, 0) + c
        return PQPoly(terms)

    def specialize(self, p=1, q=1):
        """Substitute nonzero rational values for p and q.

        Returns
        -------
        poly : ExactPoly
            Polynomial in x over the rationals.
        """
        p = Fraction(p)
        q = Fraction(q)
        if p == 0 or q == 0:
            raise ValueError('p and q must be nonzero to specialize')
        coeffs = [Fraction(0)] * (self.x_degree + 1)
        for (a, pe, qe), c in self.__terms.items():
            coeffs[a] += c * p**pe * q**qe
        return ExactPoly(coeffs, rational=True)

    def x_marginal(self):
        """The integer polynomial obtained at p = q = 1."""
        coeffs = [0] * (self.x_degree + 1)
        for (a, _, _), c in self.__terms.items():
            coeffs[a] += c
        return ExactPoly(coeffs)

    def to_json(self):
        return [{'x': a, 'p': pe, 'q': qe, 'c': str(c)}
                for (a, pe, qe), c in self.items()]

    @classmethod
    def from_json(cls, payload):
        return cls({(t['x'], t['p'], t['q']): int(t['c']) for t in payload})


@dataclass(frozen=True)
class IsolatingInterval:
    """Closed interval [lo, hi] holding exactly one distinct real root.
    When lo == hi the root is exactly lo."""
    lo: Fraction
    hi: Fraction
    multiplicity: int
    exact_root: object = None

    def contains(self, x):
        if self.exact_root is not None:
            return x == self.exact_root
        return self.lo <= x <= self.hi

    @property
    def width(self):
        return self.hi - self.lo

    def to_json(self):
        return {'lo': str(self.lo), 'hi': str(self.hi),
                'multiplicity': self.multiplicity,
                'exact_root': (None if self.exact_root is None
                               else str(self.exact_root))}


@dataclass(frozen=True)
class RootCertificate:
    degree: int
    real_root_count_with_multiplicity: int
    intervals: tuple = field(default_factory=tuple)

    @property
    def is_real_rooted(self):
        return self.real_root_count_with_multiplicity == self.degree

    def to_json(self):
        return {'degree': self.degree,
                'real_root_count_with_multiplicity':
                    self.real_root_count_with_multiplicity,
                'is_real_rooted': self.is_real_rooted,
                'intervals': [i.to_json() for i in self.intervals]}


@dataclass(frozen=True)
class GammaVector:
    """Coefficients of h = sum_i gamma_i x^i (1+x)^(degree-2i)."""
    gammas: tuple
    degree: int

    @property
    def nonnegative(self):
        return all(g >= 0 for g in self.gammas)

    def reconstruct(self):
        result = ExactPoly([])
        for i, g in enumerate(self.gammas):
            if g != 0:
                result = result + (ExactPoly([1, 1])**(self.degree - 2 * i)
                                   ).shift(i) * g
        return result

    def to_json(self):
        return {'degree': self.degree,
                'gammas': [str(g) for g in self.gammas],
                'gamma_nonnegative': self.nonnegative}


@dataclass(frozen=True)
class CoefficientShape:
    unimodal: bool
    log_concave: bool

    def to_json(self):
        return {'unimodal': self.unimodal, 'log_concave': self.log_concave}


def _require_nonzero(f):
    if f.is_zero:
        raise ZeroPolynomialError('zero polynomial has no Sturm sequence')


def polynomial_gcd(f, g):
    """
    Greatest common divisor, primitive with positive leading
    coefficient. Works for rational inputs through their primitive
    parts.

    Parameters
    ----------
    f, g : ExactPoly

    Returns
    -------
    divisor : ExactPoly
        The zero polynomial only when both inputs are zero.
    """
    if f.is_zero and g.is_zero:
        return ExactPoly([])
    return ExactPoly.from_poly(f.poly.gcd(g.poly)).primitive_part()


def squarefree_part(f):
    """f / gcd(f, f') as a primitive integer polynomial."""
    _require_nonzero(f)
    if f.degree <= 0:
        return ExactPoly([1])
    return ExactPoly.from_poly(f.poly.sqf_part()).primitive_part()


def multiplicity_chain(f):
    """
    The chain f, gcd(f, f'), gcd of that with its derivative, ...
    stopping before the first constant. A real root of multiplicity m
    is a root of exactly the first m members.
    """
    _require_nonzero(f)
    chain = []
    g = f.primitive_part()
    while g.degree > 0:
        chain.append(g)
        g = polynomial_gcd(g, g.derivative())
    return chain


@lru_cache(maxsize=1024)
def sturm_sequence(f):
    """
    Sturm sequence of the squarefree part of f.

    The members are the modified subresultants of (sqf, sqf'), integer
    polynomials whose signs match the classical negated-remainder
    sequence.

    Parameters
    ----------
    f : ExactPoly
        Nonzero polynomial.

    Returns
    -------
    sequence : tuple of ExactPoly
    """
    p = squarefree_part(f)
    if p.degree <= 0:
        return (p,)
    members = sturm_pg(p.poly.as_expr(), p.derivative().poly.as_expr(), X)
    return tuple(ExactPoly.from_poly(sympy.Poly(member, X, domain=sympy.QQ),
                                     retract=True)
                 for member in members if member != 0)


def _sign_at(poly, x):
    """Sign of poly at a rational, or at -oo/+oo given as (None, -1)
    and (None, 1)."""
    if isinstance(x, tuple):
        direction = x[1]
        return _sign(poly.leading) * (direction**poly.degree if direction < 0
                                      else 1)
    return _sign(poly.poly.eval(_to_sympy(x)))


def _variations(sequence, x):
    signs = [s for s in (_sign_at(poly, x) for poly in sequence) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


_MINUS_INFINITY = (None, -1)
_PLUS_INFINITY = (None, 1)


def sturm_count(f, lo=None, hi=None):
    """
    Number of DISTINCT real roots of f in the half-open interval
    (lo, hi].

    Parameters
    ----------
    f : ExactPoly
        Nonzero polynomial.
    lo : rational or None
        Lower end, None for -oo.
    hi : rational or None
        Upper end, None for +oo.

    Returns
    -------
    count : int

    Raises
    ------
    ZeroPolynomialError
        If f is the zero polynomial.
    """
    _require_nonzero(f)
    if lo is not None and hi is not None and Fraction(lo) >= Fraction(hi):
        if Fraction(lo) > Fraction(hi):
            raise ValueError(f'empty interval ({lo}, {hi}]')
        return 0
    sequence = sturm_sequence(f)
    if len(sequence) == 1:
        return 0
    left = _MINUS_INFINITY if lo is None else Fraction(lo)
    right = _PLUS_INFINITY if hi is None else Fraction(hi)
    return _variations(sequence, left) - _variations(sequence, right)


def _rational_roots(f):
    """The rational roots of f, read off its linear factors over ZZ."""
    _, p = f.poly.clear_denoms(convert=True)
    _, factors = p.factor_list()
    roots = set()
    for factor, _ in factors:
        if factor.degree() == 1:
            a, b = factor.all_coeffs()
            roots.add(-_to_fraction(b) / _to_fraction(a))
    return roots


def _profile(polys):
    """
    Merge the real roots of several nonzero polynomials.

    Returns
    -------
    profile : list of (IsolatingInterval, list of int)
        One entry per distinct real root of the product, ascending,
        with the multiplicity of that root in each input polynomial.
        The interval's multiplicity is the one in the product.
    """
    for f in polys:
        _require_nonzero(f)
    roots = set().union(*(_rational_roots(f) for f in polys))
    merged = sympy.intervals([f.poly for f in polys])
    isolated = [(_to_fraction(sympy.Rational(a)),
                 _to_fraction(sympy.Rational(b)), indices)
                for (a, b), indices in merged]
    roots -= {lo for lo, hi, _ in isolated if lo == hi}
    profile = []
    for lo, hi, indices in isolated:
        if lo == hi:
            root = lo
        else:
            # the interval isolates one root of the product
            inside = [r for r in roots if lo <= r <= hi]
            root = inside[0] if len(inside) == 1 else None
        if root is not None:
            lo = hi = root
        multiplicities = [indices.get(i, 0) for i in range(len(polys))]
        interval = IsolatingInterval(lo, hi, sum(multiplicities), root)
        profile.append((interval, multiplicities))
    profile.sort(key=lambda entry: (entry[0].lo, entry[0].hi))
    return profile


def isolate_roots(f):
    """
    Isolate the distinct real roots of f.

    Parameters
    ----------
    f : ExactPoly
        Nonzero polynomial.

    Returns
    -------
    intervals : list of IsolatingInterval
        Disjoint, ascending, one per distinct real root, each with the
        root's multiplicity. Rational roots come back as degenerate
        intervals with exact_root set.
    """
    return [interval for interval, _ in _profile([f])]


def refine_to(f, intervals, width):
    """
    Shrink isolating intervals of f until each is narrower than width.

    Parameters
    ----------
    f : ExactPoly
    intervals : list of IsolatingInterval
        As returned by isolate_roots(f).
    width : rational
        Positive target width.

    Returns
    -------
    intervals : list of IsolatingInterval
    """
    width = Fraction(width)
    if width <= 0:
        raise ValueError(f'refinement width should be positive, not {width}')
    p = squarefree_part(f).poly
    refined = []
    for interval in intervals:
        lo, hi = interval.lo, interval.hi
        if interval.exact_root is None and hi - lo >= width:
            a, b = p.refine_root(_to_sympy(lo), _to_sympy(hi),
                                 eps=_to_sympy(width / 2))
            lo = _to_fraction(sympy.Rational(a))
            hi = _to_fraction(sympy.Rational(b))
        refined.append(IsolatingInterval(lo, hi, interval.multiplicity,
                                         interval.exact_root))
    return refined


def certify_real_rooted(f):
    """
    Count the real roots of f with multiplicity.

    The count is the sum of Sturm counts over the gcd chain
    f, gcd(f, f'), ...; f is real-rooted when the count equals its
    degree. Nonzero constants are real-rooted.

    Parameters
    ----------
    f : ExactPoly

    Returns
    -------
    certificate : RootCertificate
    """
    _require_nonzero(f)
    count = sum(sturm_count(g) for g in multiplicity_chain(f))
    intervals = tuple(isolate_roots(f)) if f.degree > 0 else ()
    certificate = RootCertificate(f.degree, count, intervals)
    logger.debug('degree %d polynomial has %d real roots', f.degree, count)
    return certificate


def _require_real_rooted(*polys):
    for f in polys:
        if f.is_zero:
            raise ZeroPolynomialError('zero polynomial has no Sturm sequence')
        if f.leading <= 0:
            raise ValueError(f'{f} should have a positive leading'
                             ' coefficient')
        if not certify_real_rooted(f).is_real_rooted:
            raise NotRealRootedError('interlacing undefined for'
                                     ' non-real-rooted polynomial')


def _counts_from_top(profile, index):
    """n(x0) for one polynomial at every merged root x0, ascending."""
    counts = []
    running = 0
    for _, multiplicities in reversed(profile):
        running += multiplicities[index]
        counts.append(running)
    return counts[::-1]


def certify_interlaces(f, g):
    """
    Decide whether f interlaces g: deg f <= deg g <= deg f + 1 and
    the roots weakly alternate, ... <= x_2 <= xi_2 <= x_1 <= xi_1 with
    x the roots of f and xi the roots of g.

    Equivalently 0 <= n_g(x0) - n_f(x0) <= 1 at every real x0, which
    only needs checking at the merged roots. Shared roots are detected
    exactly since both polynomials are resolved against the same
    squarefree product.

    Parameters
    ----------
    f, g : ExactPoly
        Real-rooted, positive leading coefficients.

    Returns
    -------
    interlaces : bool

    Raises
    ------
    NotRealRootedError
        If f or g has a non-real root.
    """
    _require_real_rooted(f, g)
    if not f.degree <= g.degree <= f.degree + 1:
        return False
    profile = _profile([f, g])
    n_f = _counts_from_top(profile, 0)
    n_g = _counts_from_top(profile, 1)
    return all(0 <= b - a <= 1 for a, b in zip(n_f, n_g))


def certify_compatible_pair(f, g):
    """
    Decide whether every conic combination of f and g is real-rooted,
    through the criterion |n_f(x0) - n_g(x0)| <= 1 for all x0.

    Parameters
    ----------
    f, g : ExactPoly
        Real-rooted, positive leading coefficients.

    Returns
    -------
    compatible : bool

    Raises
    ------
    NotRealRootedError
        If f or g has a non-real root.
    """
    _require_real_rooted(f, g)
    profile = _profile([f, g])
    n_f = _counts_from_top(profile, 0)
    n_g = _counts_from_top(profile, 1)
    return all(abs(a - b) <= 1 for a, b in zip(n_f, n_g))


def certify_compatible(polys):
    """True when the family is pairwise compatible, which for
    polynomials with positive leading coefficients means compatible."""
    polys = list(polys)
    _require_real_rooted(*polys)
    return all(certify_compatible_pair(f, g)
               for f, g in itertools.combinations(polys, 2))


def gamma_expansion(h):
    """
    Expand a palindromic polynomial as sum gamma_i x^i (1+x)^(n-2i)
    with n = deg h.

    Parameters
    ----------
    h : ExactPoly

    Returns
    -------
    gamma : GammaVector

    Raises
    ------
    NotPalindromicError
        If h(x) != x^n h(1/x).
    """
    if h.is_zero or not h.is_palindromic():
        raise NotPalindromicError('gamma expansion requires palindromic'
                                  ' polynomial')
    return gamma_expansion_about(h, h.degree)


def gamma_expansion_about(h, n):
    """
    Gamma vector of h read as symmetric of degree n >= deg h, that is
    h(x) = x^n h(1/x). Polynomials divisible by x, such as the affine
    Eulerian ones, are symmetric about n/2 with n = low_degree + degree.

    Raises
    ------
    NotPalindromicError
        If h is not symmetric about n/2.
    """
    coeffs = [h.coefficient(i) for i in range(n + 1)]
    if h.is_zero or n < h.degree or coeffs != coeffs[::-1]:
        raise NotPalindromicError('gamma expansion requires palindromic'
                                  ' polynomial')
    remainder = h
    gammas = []
    for i in range(n // 2 + 1):
        g = remainder.coefficient(i)
        gammas.append(g)
        if g != 0:
            remainder = remainder - (ExactPoly([1, 1])**(n - 2 * i)
                                     ).shift(i) * g
    if not remainder.is_zero:
        raise NotPalindromicError('gamma expansion requires palindromic'
                                  ' polynomial')
    return GammaVector(tuple(gammas), n)


def coeff_shape(coeffs):
    """
    Unimodality and log-concavity of a coefficient list.

    Parameters
    ----------
    coeffs : list of int
        Nonnegative, nonempty.

    Returns
    -------
    shape : CoefficientShape
        log_concave also requires no zero strictly between nonzero
        entries.
    """
    coeffs = list(coeffs)
    if not coeffs:
        raise ValueError('coefficient list should not be empty')
    peak = coeffs.index(max(coeffs))
    unimodal = (all(a <= b for a, b in zip(coeffs[:peak], coeffs[1:peak + 1]))
                and all(a >= b for a, b in zip(coeffs[peak:],
                                               coeffs[peak + 1:])))
    nonzero = [i for i, c in enumerate(coeffs) if c != 0]
    no_internal_zeros = (not nonzero
                         or all(coeffs[i] != 0
                                for i in range(nonzero[0], nonzero[-1] + 1)))
    log_concave = no_internal_zeros and all(
        coeffs[i]**2 >= coeffs[i - 1] * coeffs[i + 1]
        for i in range(1, len(coeffs) - 1))
    return CoefficientShape(unimodal, log_concave)


def real_rooted_shape_holds(f):
    """True unless f is certified real-rooted with nonnegative
    coefficients and still fails unimodality or log-concavity."""
    if any(c < 0 for c in f.coeffs):
        return True
    if not certify_real_rooted(f).is_real_rooted:
        return True
    shape = coeff_shape(f.coeffs)
    return shape.unimodal and shape.log_concave


def _linear_factor_str(a, b):
    """a x + b with a > 0 and gcd(a, b) = 1."""
    if b == 0:
        return 'x'
    head = 'x' if a == 1 else f'{a}x'
    return f'({head} + {b})' if b > 0 else f'({head} - {-b})'


def factored_form(f):
    """
    Factored string such as "2x(x + 3)" when every root of f is an
    exact rational, None otherwise.
    """
    _require_nonzero(f)
    if f.degree == 0:
        return str(f.leading)
    denominator, p = f.poly.clear_denoms(convert=True)
    content, factors = p.factor_list()
    if any(factor.degree() != 1 for factor, _ in factors):
        return None
    scalar = _to_fraction(sympy.Rational(content)) / _to_fraction(
        sympy.Rational(denominator))
    linear = []
    for factor, multiplicity in factors:
        a, b = (int(c) for c in factor.all_coeffs())
        if a < 0:
            a, b = -a, -b
            scalar *= (-1)**multiplicity
        linear.append((Fraction(-b, a), a, b, multiplicity))
    pieces = []
    for root, a, b, multiplicity in sorted(linear,
                                           key=lambda e: (e[0] != 0, -e[0])):
        piece = _linear_factor_str(a, b)
        if multiplicity > 1:
            piece += f'^{multiplicity}'
        pieces.append(piece)
    prefix = str(scalar)
    if scalar == 1:
        prefix = ''
    elif scalar == -1:
        prefix = '-'
    elif scalar.denominator != 1:
        prefix = f'({scalar})'
    return prefix + ''.join(pieces)


def binomial_series(numerator, dimension, terms):
    """
    First terms of numerator(x) / (1 - x)^(dimension + 1).

    Parameters
    ----------
    numerator : ExactPoly
    dimension : int
    terms : int
        Number of coefficients to return.

    Returns
    -------
    coefficients : list
        Coefficient of x^t is sum_j c_j * C(t - j + dimension, dimension).
    """
    return [sum(c * comb(t - j + dimension, dimension)
                for j, c in enumerate(numerator.coeffs) if j <= t)
            for t in range(terms)]
