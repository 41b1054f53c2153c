"""Lattice points of dilated s-lecture hall polytopes and the series
identities they satisfy."""

# Built-in imports
from dataclasses import dataclass
from math import comb, prod

# 3rd-party imports
import numpy as np

# Local imports
from s_eulerian.eulerian import e_poly
from s_eulerian.groups import multiset_poly
from s_eulerian.invseq import SSeq
from s_eulerian.polyx import ExactPoly, binomial_series, coeff_shape

SERIES_KINDS = ('signedB', 'kary', 'multiset2', 'signedMultiset', 'macmahon')


def lattice_count(s, t):
    """
    Count the lattice points of t times the s-lecture hall polytope,
    0 <= l_1/s_1 <= l_2/s_2 <= ... <= l_n/s_n <= t.

    A layered count keyed by the value of l_i: the number of chains
    ending in l_{i+1} = w is the number ending in any
    l_i <= floor(w s_i / s_{i+1}).

    Parameters
    ----------
    s : SSeq
    t : int
        Dilation factor, at least 0.

    Returns
    -------
    count : int
    """
    if t < 0:
        raise ValueError(f'dilation should be >= 0, not {t}.')
    if len(s) == 0:
        return 1
    # object arrays keep Python integers, so counts never overflow
    layer = np.ones(t * s[0] + 1, dtype=object)
    for previous, current in zip(s, s.s[1:]):
        reachable = np.cumsum(layer)
        limits = np.arange(t * current + 1) * previous // current
        layer = reachable[limits]
    return int(np.sum(layer))


@dataclass(frozen=True)
class EhrhartData:
    s: SSeq
    counts: tuple
    hstar: ExactPoly

    def series(self):
        """Coefficients of hstar / (1 - x)^(n + 1) through degree T."""
        return binomial_series(self.hstar, len(self.s), len(self.counts))

    @property
    def agrees(self):
        return list(self.counts) == self.series()

    def to_json(self):
        return {'s': self.s.to_json(), 'counts': [str(c) for c in self.counts],
                'series': [str(c) for c in self.series()],
                'hstar': self.hstar.to_json(), 'agrees': self.agrees}


def ehrhart_data(s, n, T):
    """
    Lattice counts for t = 0..T next to the h*-polynomial E_n^(s).

    Parameters
    ----------
    s : SSeq
    n : int
        Use the first n entries of s.
    T : int
        Largest dilation.

    Returns
    -------
    data : EhrhartData
    """
    s = s.prefix(n)
    counts = tuple(lattice_count(s, t) for t in range(T + 1))
    return EhrhartData(s, counts, e_poly(s, n))


def ehrhart_check(s, n, T):
    """True when the lattice counts match E_n^(s)(x)/(1-x)^(n+1)
    coefficient by coefficient through x^T."""
    return ehrhart_data(s, n, T).agrees


def has_vanishing_differences(counts, degree):
    """True when the finite differences of order degree + 1 of the
    counts are all zero, i.e. they follow a polynomial of that degree."""
    values = np.array(counts, dtype=object)
    if len(values) <= degree + 1:
        return True
    return all(v == 0 for v in np.diff(values, n=degree + 1))


def hstar_shape(s, n):
    """Unimodality and log-concavity of the h*-vector E_n^(s)."""
    return coeff_shape(e_poly(s, n).coeffs)


def _closed_form(kind, n, k, multiplicities):
    if kind == 'signedB':
        return lambda t: (2 * t + 1)**n
    if kind == 'kary':
        return lambda t: comb(n + k * t, n)
    if kind == 'multiset2':
        return lambda t: ((t + 1) * (t + 2) // 2)**n
    if kind == 'signedMultiset':
        return lambda t: ((t + 1) * (2 * t + 1))**n
    if kind == 'macmahon':
        return lambda t: prod(comb(t + p, p) for p in multiplicities)
    raise ValueError(f'unknown series kind {kind!r};'
                     f' expected one of {SERIES_KINDS}.')


def series_identity(kind, n, k=None, T=10, multiplicities=None):
    """
    Numerator, series and closed form for one of the point-count
    identities.

    Parameters
    ----------
    kind : str
        signedB: E^(2,4,...,2n) over (1-x)^(n+1) counts (2t+1)^n.
        kary: E^(k,...,k) over (1-x)^(n+1) counts C(n+kt, n).
        multiset2: E^(1,1,3,2,...) over (1-x)^(2n+1) counts
        ((t+1)(t+2)/2)^n.
        signedMultiset: E^(1,4,3,8,...) over (1-x)^(2n+1) counts
        ((t+1)(2t+1))^n.
        macmahon: the descent polynomial of the multiset
        {1^p_1, ..., n^p_n} over (1-x)^(|M|+1) counts
        prod C(t+p_i, p_i).
    n : int
    k : int or None
        Letter count for kary.
    T : int
        Largest coefficient compared.
    multiplicities : sequence of int or None
        p_1..p_n for macmahon; each letter twice when None.

    Returns
    -------
    numerator : ExactPoly
    series : list of int
    closed : list of int
    """
    if n < 1:
        raise ValueError(f'n should be >= 1, not {n}.')
    if kind == 'signedB':
        s = SSeq.type_b(n)
    elif kind == 'kary':
        if k is None or k < 1:
            raise ValueError('kary needs k >= 1')
        s = SSeq.constant(k, n)
    elif kind == 'multiset2':
        s = SSeq.multiset_pairs(n)
    elif kind == 'signedMultiset':
        s = SSeq.signed_multiset_pairs(n)
    elif kind == 'macmahon':
        s = None
        if multiplicities is None:
            multiplicities = (2,) * n
        if len(multiplicities) != n or any(p < 1 for p in multiplicities):
            raise ValueError('macmahon needs n positive multiplicities')
    else:
        raise ValueError(f'unknown series kind {kind!r};'
                         f' expected one of {SERIES_KINDS}.')
    closed_form = _closed_form(kind, n, k, multiplicities)
    if s is None:
        letters = [i for i, p in enumerate(multiplicities, start=1)
                   for _ in range(p)]
        numerator = multiset_poly(letters)
        dimension = len(letters)
    else:
        numerator = e_poly(s, len(s))
        dimension = len(s)
    series = binomial_series(numerator, dimension, T + 1)
    closed = [closed_form(t) for t in range(T + 1)]
    return numerator, series, closed


def series_identity_check(kind, n, k=None, T=10, multiplicities=None):
    """True when the first T + 1 series coefficients equal the closed
    form point counts."""
    _, series, closed = series_identity(kind, n, k, T, multiplicities)
    return series == closed
