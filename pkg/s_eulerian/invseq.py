"""s-inversion sequences, their statistics and exhaustive enumeration
oracles."""

# Built-in imports
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import prod
import logging

# Local imports
from s_eulerian.constants import STATISTICS, enumeration_budget
from s_eulerian.miscellaneous import parse_int_list
from s_eulerian.polyx import PQPoly

logger = logging.getLogger(__name__)


class BudgetExceededError(ValueError):
    """Raised when an exhaustive enumeration would visit more objects
    than the enumeration budget allows."""


def check_budget(size, budget=None, what='inversion sequences'):
    """
    Refuse enumerations larger than the budget.

    Parameters
    ----------
    size : int
        Number of objects the enumeration would visit.
    budget : int or None
        Explicit budget. None reads EULERIAN_ENUM_BUDGET.
    what : str
        Name of the objects, used in the error message.

    Returns
    -------
    None.
    """
    if budget is None:
        budget = enumeration_budget()
    if size > budget:
        raise BudgetExceededError(f'enumerating {size} {what} exceeds the'
                                  f' budget of {budget}')


def fraction_less(a, sa, b, sb):
    """a/sa < b/sb for positive sa, sb, by cross-multiplication."""
    return a * sb < b * sa


@dataclass(frozen=True)
class SSeq:
    """A sequence s_1, ..., s_n of positive integers. s_0 = 1 is
    implicit."""
    s: tuple

    def __post_init__(self):
        values = tuple(self.s)
        if any(not isinstance(v, int) or isinstance(v, bool) for v in values):
            raise TypeError(f's should hold integers, not {values}.')
        if any(v < 1 for v in values):
            raise ValueError(f'every entry of s should be >= 1, got {values}.')
        object.__setattr__(self, 's', values)

    @classmethod
    def parse(cls, text):
        """Read "1,3,5"."""
        return cls(tuple(parse_int_list(text)))

    @classmethod
    def arithmetic(cls, k, n):
        """(k, 2k, ..., nk)."""
        return cls(tuple(i * k for i in range(1, n + 1)))

    @classmethod
    def type_b(cls, n):
        """(2, 4, ..., 2n)."""
        return cls.arithmetic(2, n)

    @classmethod
    def constant(cls, k, n):
        """(k, k, ..., k), the k-ary words."""
        return cls((k,) * n)

    @classmethod
    def multiset_pairs(cls, n):
        """(1, 1, 3, 2, 5, 3, ...) of length 2n, for permutations of
        {1, 1, 2, 2, ..., n, n}."""
        return cls(tuple(v for i in range(1, n + 1) for v in (2 * i - 1, i)))

    @classmethod
    def signed_multiset_pairs(cls, n):
        """(1, 4, 3, 8, 5, 12, ...) of length 2n, for signed
        permutations of {1, 1, 2, 2, ..., n, n}."""
        return cls(tuple(v for i in range(1, n + 1)
                         for v in (2 * i - 1, 4 * i)))

    @classmethod
    def exc_cyc(cls, k, n):
        """s_i = (i - 1)k + 1, for the excedance and cycle statistics."""
        return cls(tuple((i - 1) * k + 1 for i in range(1, n + 1)))

    def __len__(self):
        return len(self.s)

    def __getitem__(self, index):
        return self.s[index]

    def __iter__(self):
        return iter(self.s)

    def prefix(self, n):
        if n > len(self.s):
            raise ValueError(f'n = {n} exceeds the length {len(self.s)} of'
                             f' s = {self.s}.')
        return SSeq(self.s[:n])

    @property
    def size(self):
        """Number of s-inversion sequences, the product of the s_i."""
        return prod(self.s)

    def arithmetic_step(self):
        """k when s = (k, 2k, ..., nk), None otherwise."""
        if not self.s:
            return None
        k = self.s[0]
        if all(v == i * k for i, v in enumerate(self.s, start=1)):
            return k
        return None

    def to_json(self):
        return list(self.s)


@dataclass(frozen=True)
class InvSeq:
    """An s-inversion sequence: 0 <= e_i < s_i, with e_0 = 0."""
    e: tuple
    bound: SSeq

    def __post_init__(self):
        values = tuple(self.e)
        if len(values) != len(self.bound):
            raise ValueError(f'e = {values} and s = {self.bound.s} have'
                             ' different lengths.')
        for i, (v, limit) in enumerate(zip(values, self.bound), start=1):
            if not 0 <= v < limit:
                raise ValueError(f'e_{i} = {v} is outside [0, {limit}).')
        object.__setattr__(self, 'e', values)

    def __len__(self):
        return len(self.e)


@dataclass(frozen=True)
class StatBundle:
    asc: int
    amaj: int
    weight: int
    ascent_set: frozenset
    ifmaj: object = None
    asc_d: object = None
    affine_asc_d: object = None
    ascent_set_d: object = None

    def value(self, name):
        v = getattr(self, name)
        if v is None:
            raise ValueError(f'statistic {name} is not defined for this'
                             ' sequence.')
        return v


def _ascents(e, s):
    ascents = []
    previous, previous_bound = 0, 1
    for i, (v, bound) in enumerate(zip(e, s)):
        if previous * bound < v * previous_bound:
            ascents.append(i)
        previous, previous_bound = v, bound
    return ascents


def ascent_set(e):
    """
    Ascent set of an inversion sequence.

    Parameters
    ----------
    e : InvSeq

    Returns
    -------
    ascents : frozenset of int
        Indices i in {0, ..., n-1} with e_i/s_i < e_{i+1}/s_{i+1},
        where e_0 = 0 and s_0 = 1.
    """
    return frozenset(_ascents(e.e, e.bound.s))


def _type_d_ascents(e, ascents):
    # e_1 + e_2/2 >= 3/2 replaces the plain test at index 0
    rest = [i for i in ascents if i > 0]
    if 2 * e[0] + e[1] >= 3:
        return [0] + rest
    return rest


def _affine_type_d_ascents(e, ascents):
    n = len(e)
    count = len(_type_d_ascents(e, ascents))
    if e[n - 2] * n + e[n - 1] * (n - 1) < (2 * n - 1) * (n - 1):
        count += 1
    return count


def _raw_stat(name, e, s, ascents, k):
    n = len(e)
    if name == 'asc':
        return len(ascents)
    if name == 'amaj':
        return sum(n - j for j in ascents)
    if name == 'weight':
        return sum(e)
    if name == 'ifmaj':
        amaj = sum(n - j for j in ascents)
        return k * amaj - sum(v // j for j, v in enumerate(e, start=1))
    if name == 'asc_d':
        return len(_type_d_ascents(e, ascents))
    if name == 'affine_asc_d':
        return _affine_type_d_ascents(e, ascents)
    raise ValueError(f'unknown statistic {name!r};'
                     f' expected one of {STATISTICS}.')


def _check_weights(s, weights, k):
    """Validate a statistic selection against s; returns the k used by
    ifmaj."""
    if not 1 <= len(weights) <= 3:
        raise ValueError('select one to three statistics (x, q, p)')
    for name in weights:
        if name not in STATISTICS:
            raise ValueError(f'unknown statistic {name!r};'
                             f' expected one of {STATISTICS}.')
    if 'ifmaj' in weights:
        step = s.arithmetic_step()
        if k is None:
            k = step
        if step is None or step != k:
            raise ValueError(f'ifmaj needs s = (k, 2k, ..., nk), got'
                             f' s = {s.s}.')
    if {'asc_d', 'affine_asc_d'} & set(weights):
        if s.arithmetic_step() != 2:
            raise ValueError(f'asc_d needs s = (2, 4, ..., 2n), got'
                             f' s = {s.s}.')
        if len(s) < 2:
            raise ValueError('asc_d needs n >= 2')
    return k


def stats(e, k=None, type_d=None):
    """
    All statistics of one inversion sequence.

    Parameters
    ----------
    e : InvSeq
    k : int or None
        Color count for Ifmaj. Must match s = (k, 2k, ..., nk). When
        None, Ifmaj is computed whenever s has that shape.
    type_d : bool or None
        Whether to compute asc_d and affine_asc_d. True requires
        s = (2, 4, ..., 2n) with n >= 2; None computes them when s
        has that shape.

    Returns
    -------
    bundle : StatBundle
    """
    s = e.bound
    ascents = _ascents(e.e, s.s)
    step = s.arithmetic_step()
    if k is not None and step != k:
        raise ValueError(f'ifmaj with k = {k} needs s = (k, 2k, ..., nk),'
                         f' got s = {s.s}.')
    k = step if k is None else k
    type_b_shape = step == 2 and len(s) >= 2
    if type_d and not type_b_shape:
        raise ValueError(f'asc_d needs s = (2, 4, ..., 2n) with n >= 2,'
                         f' got s = {s.s}.')
    if type_d is None:
        type_d = type_b_shape

    bundle = {'asc': len(ascents),
              'amaj': _raw_stat('amaj', e.e, s.s, ascents, k),
              'weight': sum(e.e),
              'ascent_set': frozenset(ascents)}
    if k is not None:
        bundle['ifmaj'] = _raw_stat('ifmaj', e.e, s.s, ascents, k)
    if type_d:
        type_d_ascents = _type_d_ascents(e.e, ascents)
        bundle['ascent_set_d'] = frozenset(type_d_ascents)
        bundle['asc_d'] = len(type_d_ascents)
        bundle['affine_asc_d'] = _affine_type_d_ascents(e.e, ascents)
    return StatBundle(**bundle)


def unrank(s, rank):
    """The sequence at a given position of the lexicographic order."""
    digits = []
    for limit in reversed(s.s):
        rank, digit = divmod(rank, limit)
        digits.append(digit)
    if rank:
        raise ValueError('rank is beyond the number of sequences')
    return tuple(reversed(digits))


def _raw_sequences(s, start, stop):
    """Tuples e for ranks start <= r < stop, lexicographic."""
    if start >= stop:
        return
    current = list(unrank(s, start))
    limits = s.s
    for _ in range(stop - start):
        yield tuple(current)
        i = len(current) - 1
        while i >= 0:
            current[i] += 1
            if current[i] < limits[i]:
                break
            current[i] = 0
            i -= 1


def enumerate_sequences(s, budget=None, start=0, stop=None):
    """
    Stream every s-inversion sequence in lexicographic order.

    Parameters
    ----------
    s : SSeq
    budget : int or None
        Largest allowed product of the s_i. None reads
        EULERIAN_ENUM_BUDGET.
    start, stop : int
        Restrict to ranks start <= r < stop, for range-partitioned
        parallel oracles.

    Yields
    ------
    e : InvSeq
    """
    check_budget(s.size, budget)
    stop = s.size if stop is None else min(stop, s.size)
    for e in _raw_sequences(s, start, stop):
        yield InvSeq(e, s)


def partition_ranges(total, parts):
    """Split range(total) into at most `parts` contiguous
    (start, stop) pieces of nearly equal length."""
    parts = max(1, min(parts, total))
    bounds = [total * i // parts for i in range(parts + 1)]
    return [(a, b) for a, b in zip(bounds, bounds[1:])]


def _tally(s, weights, k, start, stop):
    counts = Counter()
    for e in _raw_sequences(s, start, stop):
        ascents = _ascents(e, s.s)
        values = [_raw_stat(name, e, s.s, ascents, k) for name in weights]
        values += [0] * (3 - len(values))
        # slot order x, q, p; PQPoly keys are (x, p, q)
        counts[(values[0], values[2], values[1])] += 1
    return counts


def oracle_poly(s, weights=('asc',), k=None, workers=1, budget=None):
    """
    Generating polynomial of chosen statistics by full enumeration.

    Parameters
    ----------
    s : SSeq
    weights : sequence of str
        One to three statistic names. The first is recorded by x, the
        second by q and the third by p, so ('asc', 'amaj', 'weight')
        gives sum x^asc q^amaj p^|e| and ('asc', 'ifmaj') gives
        sum x^asc q^Ifmaj.
    k : int or None
        Color count for ifmaj.
    workers : int
        Number of worker processes tallying contiguous rank ranges.
    budget : int or None
        Enumeration budget override.

    Returns
    -------
    poly : PQPoly
    """
    weights = tuple(weights)
    k = _check_weights(s, weights, k)
    check_budget(s.size, budget)
    ranges = partition_ranges(s.size, workers)
    logger.debug('tallying %d sequences of s = %s in %d ranges',
                 s.size, s.s, len(ranges))
    if len(ranges) == 1:
        counts = _tally(s, weights, k, *ranges[0])
    else:
        counts = Counter()
        with ProcessPoolExecutor(max_workers=len(ranges)) as executor:
            futures = [executor.submit(_tally, s, weights, k, a, b)
                       for a, b in ranges]
            for future in futures:
                counts.update(future.result())
    return PQPoly(dict(counts))


def oracle_x_poly(s, statistic='asc', **kwargs):
    """sum_e x^statistic(e) as an ExactPoly."""
    return oracle_poly(s, (statistic,), **kwargs).x_marginal()
