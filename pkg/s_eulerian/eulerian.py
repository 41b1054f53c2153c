"""Recurrence engines for refined s-Eulerian polynomials.

Every family here is built level by level from the weighted
recurrence

    P_{m+1,i} = d_{m,i} * ( sum_{j<l} b * P_{m,j}(x c_m)
                            + sum_{j>=l} P_{m,j}(x c_m) ),
    l = ceil(i * s_m / s_{m+1}),

where P_{m,j} counts the sequences of length m ending in e_m = j. The
standard, type D, (p,q) and flag-major families differ only in the
starting family and the monomials b, c_m and d_{m,i}.
"""

# Built-in imports
from dataclasses import dataclass
from fractions import Fraction
import itertools
import logging

# Local imports
from s_eulerian.constants import D_1_COEFFS, T_1_COEFFS
from s_eulerian.invseq import SSeq
from s_eulerian.miscellaneous import ceil_div
from s_eulerian.polyx import ExactPoly, PQPoly, certify_interlaces

logger = logging.getLogger(__name__)

KINDS = ('standard', 'typeD', 'pq', 'fmaj')


@dataclass(frozen=True)
class RefinedFamily:
    """
    The polynomials P_{n,i} of one level, indexed by the last entry i.

    Standard and typeD families hold ExactPoly values, pq and fmaj
    families hold PQPoly values.
    """
    s: SSeq
    n: int
    kind: str
    polys: tuple

    def total(self):
        """The assembled polynomial sum_i P_{n,i}."""
        return sum(self.polys[1:], self.polys[0])

    def __len__(self):
        return len(self.polys)

    def to_json(self):
        return {'kind': self.kind, 's': self.s.to_json(), 'n': self.n,
                'polys': [p.to_json() for p in self.polys]}


def weighted_recurrence(s, initial, start, stop, ascent_monomial=(1, 0, 0),
                        substitution=lambda m: 0,
                        prefactor=lambda m, i: (0, 0, 0)):
    """
    Run the weighted recurrence from level `start` to level `stop`.

    Parameters
    ----------
    s : SSeq
        Bounding sequence with at least `stop` entries.
    initial : list of PQPoly
        The family at level `start`, of length s_start.
    start, stop : int
        First and last level.
    ascent_monomial : tuple of int
        (x, p, q) exponents of b, the weight of a new ascent.
    substitution : callable
        substitution(m) = c such that level m polynomials are read at
        x -> x q^c before the transition to level m + 1.
    prefactor : callable
        prefactor(m, i) = (x, p, q) exponents of d_{m,i}, applied to
        P_{m+1,i}.

    Yields
    ------
    level, family : int, list of PQPoly
        Every level from start to stop inclusive.
    """
    if len(initial) != s[start - 1]:
        raise ValueError(f'level {start} needs {s[start - 1]} polynomials,'
                         f' got {len(initial)}')
    family = list(initial)
    yield start, family
    for m in range(start, stop):
        shift = substitution(m)
        read = [p.substitute_xq(shift) if shift else p for p in family]
        prefix = [PQPoly()]
        for p in read:
            prefix.append(prefix[-1] + p)
        total = prefix[-1]
        old, new = s[m - 1], s[m]
        family = []
        for i in range(new):
            threshold = ceil_div(i * old, new)
            below = prefix[threshold]
            poly = below.times_monomial(*ascent_monomial) + (total - below)
            weight = prefactor(m, i)
            if weight != (0, 0, 0):
                poly = poly.times_monomial(*weight)
            family.append(poly)
        logger.debug('level %d: %d refined polynomials', m + 1, len(family))
        yield m + 1, family


def _check_level(s, n):
    if n < 1:
        raise ValueError(f'n should be >= 1, not {n}.')
    if n > len(s):
        raise ValueError(f'n = {n} exceeds the length {len(s)} of s.')


def _last(levels):
    for _, family in levels:
        pass
    return family


def _standard_levels(s, n):
    initial = ([PQPoly.monomial()]
               + [PQPoly.monomial(x=1)] * (s[0] - 1))
    return weighted_recurrence(s, initial, 1, n)


def refined(s, n):
    """
    Refined s-Eulerian polynomials P_{n,i}, 0 <= i < s_n.

    Parameters
    ----------
    s : SSeq
    n : int
        Level, 1 <= n <= len(s).

    Returns
    -------
    family : RefinedFamily
        Of kind 'standard'; family.total() is E_n^(s)(x).
    """
    _check_level(s, n)
    family = _last(_standard_levels(s, n))
    return RefinedFamily(s.prefix(n), n, 'standard',
                         tuple(p.x_marginal() for p in family))


def e_poly(s, n):
    """The s-Eulerian polynomial E_n^(s)(x)."""
    return refined(s, n).total()


def t_refined(n):
    """
    The type D refinement T_{n,i}, 0 <= i < 2n, over s = (2, 4, ..., 2n).

    Starts from T_2 = (2, 2x, 2x, 2x^2) and follows the standard
    transitions, whose threshold is ceil(n i / (n + 1)).

    Parameters
    ----------
    n : int
        At least 2. T_1 = x + 1 is available as t_poly(1).

    Returns
    -------
    family : RefinedFamily
        Of kind 'typeD'.
    """
    if n < 2:
        raise ValueError(f'the type D recurrence starts at n = 2, not {n};'
                         ' T_1 = x + 1 and D_1 = 1 are special cases.')
    s = SSeq.type_b(n)
    initial = [PQPoly.monomial(c=2), PQPoly.monomial(x=1, c=2),
               PQPoly.monomial(x=1, c=2), PQPoly.monomial(x=2, c=2)]
    family = _last(weighted_recurrence(s, initial, 2, n))
    return RefinedFamily(s, n, 'typeD', tuple(p.x_marginal() for p in family))


def t_poly(n):
    """T_n(x) = sum over B_n of x^des_D."""
    if n == 1:
        return ExactPoly(T_1_COEFFS)
    return t_refined(n).total()


def d_poly(n):
    """D_n(x) = T_n(x)/2 for n >= 2, and D_1 = 1."""
    if n < 1:
        raise ValueError(f'n should be >= 1, not {n}.')
    if n == 1:
        return ExactPoly(D_1_COEFFS)
    return t_poly(n).quo_scalar(2)


def affine_b_poly(n):
    """
    Affine Eulerian polynomial of type B, read off as T_{n+1,n+1}.

    Parameters
    ----------
    n : int
        At least 2.

    Returns
    -------
    poly : ExactPoly
    """
    if n < 2:
        raise ValueError(f'affine type B needs n >= 2, not {n}.')
    return t_refined(n + 1).polys[n + 1]


def _pq_levels(s, n):
    initial = [PQPoly.monomial()] + [PQPoly.monomial(x=1, p=i, q=1)
                                     for i in range(1, s[0])]
    return weighted_recurrence(s, initial, 1, n,
                               ascent_monomial=(1, 0, 1),
                               substitution=lambda m: 1,
                               prefactor=lambda m, i: (0, i, 0))


def refined_pq(s, n):
    """
    The (p,q) refinement P_{n,i}(x, p, q) of sum x^asc q^amaj p^|e|.

    Parameters
    ----------
    s : SSeq
    n : int

    Returns
    -------
    family : RefinedFamily
        Of kind 'pq', holding PQPoly values.
    """
    _check_level(s, n)
    family = _last(_pq_levels(s, n))
    return RefinedFamily(s.prefix(n), n, 'pq', tuple(family))


def fmaj_refined(n, k):
    """
    Refined flag-major polynomials G_{n,k,i}(x, q), 0 <= i < nk.

    Intermediate levels carry Laurent q-exponents through the prefactor
    q^(-floor(i/(m+1))); the assembled sum is checked to be an ordinary
    polynomial in q.

    Parameters
    ----------
    n, k : int
        Positive.

    Returns
    -------
    family : RefinedFamily
        Of kind 'fmaj'; the total is sum over Z_k wr S_n of
        x^des q^fmaj.
    """
    if n < 1 or k < 1:
        raise ValueError(f'n and k should be >= 1, got n = {n}, k = {k}.')
    s = SSeq.arithmetic(k, n)
    initial = [PQPoly.monomial()] + [PQPoly.monomial(x=1, q=k - i)
                                     for i in range(1, k)]
    levels = weighted_recurrence(s, initial, 1, n,
                                 ascent_monomial=(1, 0, k),
                                 substitution=lambda m: k,
                                 prefactor=lambda m, i: (0, 0,
                                                         -(i // (m + 1))))
    family = RefinedFamily(s, n, 'fmaj', tuple(_last(levels)))
    if family.total().min_exponent('q') < 0:
        raise RuntimeError(f'flag-major polynomial for n = {n}, k = {k} has'
                           ' a negative q exponent')
    return family


def specialize(fam, p=1, q=1):
    """
    Substitute positive rationals for p and q in every member.

    Parameters
    ----------
    fam : RefinedFamily
    p, q : rational
        Strictly positive.

    Returns
    -------
    polys : list of ExactPoly
        Rational coefficient polynomials in x.
    """
    p = Fraction(p)
    q = Fraction(q)
    if p <= 0 or q <= 0:
        raise ValueError(f'p and q should be positive, got p = {p},'
                         f' q = {q}.')
    if fam.kind in ('pq', 'fmaj'):
        return [poly.specialize(p, q) for poly in fam.polys]
    return [ExactPoly(poly.coeffs, rational=True) for poly in fam.polys]


def q_eulerian(pq, n, statistic):
    """
    q-analogs read off sum x^asc q^amaj p^|e| (the total of a 'pq'
    family at level n).

    Parameters
    ----------
    pq : PQPoly
    n : int
    statistic : str
        'amaj' or 'comaj' keeps q and sets p = 1; 'weight', 'inv' or
        'finv' renames p to q and sets q = 1; 'maj' substitutes
        x -> x q^n, q -> 1/q and p -> 1.

    Returns
    -------
    poly : PQPoly
        A polynomial in x and q (p exponents all 0).
    """
    if statistic in ('amaj', 'comaj'):
        return pq.transform(lambda a, pe, qe: (a, 0, qe))
    if statistic in ('weight', 'inv', 'finv'):
        return pq.transform(lambda a, pe, qe: (a, 0, pe))
    if statistic == 'maj':
        return pq.transform(lambda a, pe, qe: (a, 0, n * a - qe))
    raise ValueError(f'unknown q-statistic {statistic!r}')


def interlace_chain(s, N):
    """
    Check that E_n^(s) interlaces E_{n+1}^(s) for 1 <= n < N.

    Parameters
    ----------
    s : SSeq
    N : int
        Longest level; N = 1 is vacuously true.

    Returns
    -------
    interlaces : bool
    """
    _check_level(s, N)
    totals = [sum(family[1:], family[0]).x_marginal()
              for _, family in _standard_levels(s, N)]
    for n, (f, g) in enumerate(zip(totals, totals[1:]), start=1):
        if not certify_interlaces(f, g):
            logger.debug('E_%d does not interlace E_%d for s = %s',
                         n, n + 1, s.s)
            return False
    return True


def refined_interlacing(fam):
    """True when polys[i] interlaces polys[j] for every i < j of a
    standard or typeD family."""
    if fam.kind not in ('standard', 'typeD'):
        raise ValueError('refined_interlacing needs ExactPoly members;'
                         ' specialize pq and fmaj families first')
    return all(certify_interlaces(f, g)
               for f, g in itertools.combinations(fam.polys, 2))
