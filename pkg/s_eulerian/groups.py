"""Permutation groups and words: enumeration, descent-type statistics
and the bijections to inversion sequences.

Group elements are small immutable dataclasses. Whole groups are
streamed by unranking, so any contiguous rank range can be tallied on
its own worker process.
"""

# Built-in imports
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import factorial
import itertools
import logging

# Local imports
from s_eulerian.invseq import (InvSeq, SSeq, ascent_set, check_budget,
                               fraction_less, partition_ranges, stats)
from s_eulerian.polyx import ExactPoly, PQPoly

logger = logging.getLogger(__name__)

GROUPS = ('S', 'B', 'D', 'wreath', 'multiset')

STATISTICS = ('des', 'inv', 'maj', 'comaj', 'exc', 'cyc', 'des_wreath',
              'des_B', 'des_D', 'affine_des_B', 'affine_des_D', 'finv',
              'fmaj', 'des_multiset')


@dataclass(frozen=True)
class Perm:
    """A permutation of {1, ..., n} in one-line notation."""
    window: tuple

    def __post_init__(self):
        window = tuple(self.window)
        if sorted(window) != list(range(1, len(window) + 1)):
            raise ValueError(f'{window} is not a permutation of 1..n')
        object.__setattr__(self, 'window', window)

    @property
    def n(self):
        return len(self.window)


@dataclass(frozen=True)
class SignedPerm:
    """A signed permutation in window notation; in D_n when the number
    of negative entries is even."""
    window: tuple

    def __post_init__(self):
        window = tuple(self.window)
        if sorted(abs(v) for v in window) != list(range(1, len(window) + 1)):
            raise ValueError(f'{window} is not a signed permutation')
        object.__setattr__(self, 'window', window)

    @property
    def n(self):
        return len(self.window)

    @property
    def negatives(self):
        return sum(1 for v in self.window if v < 0)

    @property
    def in_type_d(self):
        return self.negatives % 2 == 0

    def as_colored(self):
        """The same element of Z_2 wr S_n, negative entries colored 1."""
        return ColoredPerm(Perm(tuple(abs(v) for v in self.window)),
                           tuple(int(v < 0) for v in self.window), 2)


@dataclass(frozen=True)
class ColoredPerm:
    """An element (pi, xi) of Z_k wr S_n with colors 0 <= xi_i < k."""
    perm: Perm
    colors: tuple
    k: int

    def __post_init__(self):
        colors = tuple(self.colors)
        if self.k < 1:
            raise ValueError(f'k should be >= 1, not {self.k}.')
        if len(colors) != self.perm.n:
            raise ValueError('one color per entry is needed')
        if any(not 0 <= c < self.k for c in colors):
            raise ValueError(f'colors {colors} are outside [0, {self.k}).')
        object.__setattr__(self, 'colors', colors)

    @property
    def n(self):
        return self.perm.n


@dataclass(frozen=True)
class MultisetPerm:
    """A rearrangement of a multiset of positive integers, optionally
    carrying a sign on every letter."""
    word: tuple
    signs: object = None

    def __post_init__(self):
        word = tuple(self.word)
        if any(v < 1 for v in word):
            raise ValueError('multiset letters should be positive')
        object.__setattr__(self, 'word', word)
        if self.signs is not None:
            signs = tuple(self.signs)
            if len(signs) != len(word) or any(v not in (1, -1)
                                              for v in signs):
                raise ValueError('signs should be one +1 or -1 per letter')
            object.__setattr__(self, 'signs', signs)

    @property
    def n(self):
        return len(self.word)

    @property
    def signed_word(self):
        if self.signs is None:
            return self.word
        return tuple(v * s for v, s in zip(self.word, self.signs))


def descent_set(window):
    """{i : w_i > w_{i+1}}, 1 <= i < n."""
    return [i for i in range(1, len(window))
            if window[i - 1] > window[i]]


def wreath_descent_set(x):
    """Descents of a colored permutation: i is a descent when
    xi_i < xi_{i+1}, or xi_i = xi_{i+1} and pi_i > pi_{i+1}, with
    pi_0 = xi_0 = 0."""
    window = (0,) + x.perm.window
    colors = (0,) + x.colors
    return [i for i in range(x.n)
            if colors[i] < colors[i + 1]
            or (colors[i] == colors[i + 1] and window[i] > window[i + 1])]


def inversions(window):
    return sum(1 for i, j in itertools.combinations(range(len(window)), 2)
               if window[i] > window[j])


def cycle_count(window):
    seen = set()
    cycles = 0
    for start in range(1, len(window) + 1):
        if start in seen:
            continue
        cycles += 1
        current = start
        while current not in seen:
            seen.add(current)
            current = window[current - 1]
    return cycles


def _natural_descents(signed):
    """Descents in the usual order of the integers with sigma_0 = 0."""
    window = (0,) + tuple(signed)
    return [i for i in range(len(signed)) if window[i] > window[i + 1]]


def _type_d_descents(window):
    rest = descent_set(window)
    if window[0] + window[1] < 0:
        return [0] + rest
    return rest


def _affine_end(window):
    return int(window[-2] + window[-1] > 0)


def _perm_stat(window, name):
    n = len(window)
    if name == 'des':
        return len(descent_set(window))
    if name == 'inv':
        return inversions(window)
    if name == 'maj':
        return sum(descent_set(window))
    if name == 'comaj':
        return sum(n - j for j in descent_set(window))
    if name == 'exc':
        return sum(1 for i, v in enumerate(window, start=1) if v > i)
    if name == 'cyc':
        return cycle_count(window)
    return None


def _colored_stat(x, name):
    n = x.n
    if name in ('des', 'des_wreath'):
        return len(wreath_descent_set(x))
    if name == 'maj':
        return sum(wreath_descent_set(x))
    if name == 'comaj':
        return sum(n - j for j in wreath_descent_set(x))
    if name == 'inv':
        return inversions(x.perm.window)
    if name == 'finv':
        return (inversions(x.perm.window)
                + sum(i * c for i, c in enumerate(x.colors, start=1)))
    if name == 'fmaj':
        comaj = sum(n - j for j in wreath_descent_set(x))
        return x.k * comaj - sum(x.colors)
    return None


def _signed_stat(sigma, name):
    window = sigma.window
    if name in ('des_D', 'affine_des_D') and sigma.n < 2:
        raise ValueError(f'{name} needs n >= 2')
    if name == 'affine_des_B' and sigma.n < 2:
        raise ValueError('affine_des_B needs n >= 2')
    if name == 'des_B':
        return len(_natural_descents(window))
    if name == 'des_D':
        return len(_type_d_descents(window))
    if name == 'affine_des_B':
        return (int(window[0] < 0) + len(descent_set(window))
                + _affine_end(window))
    if name == 'affine_des_D':
        return len(_type_d_descents(window)) + _affine_end(window)
    if name in ('des_wreath', 'finv', 'fmaj', 'maj', 'comaj', 'inv'):
        return _colored_stat(sigma.as_colored(), name)
    if name == 'des':
        raise ValueError('des is ambiguous on signed permutations; use'
                         ' des_wreath or des_B')
    return None


def _multiset_stat(w, name):
    if name in ('des', 'des_multiset'):
        return len(_natural_descents(w.signed_word))
    return None


def stat(x, name):
    """
    Evaluate a statistic on a group element.

    Parameters
    ----------
    x : Perm, SignedPerm, ColoredPerm or MultisetPerm
    name : str
        One of STATISTICS. des_wreath uses the order
        -1 < -2 < ... < 0 < 1 < 2 < ... on signed permutations, des_B
        the usual order of the integers.

    Returns
    -------
    value : int
    """
    if name not in STATISTICS:
        raise ValueError(f'unknown statistic {name!r};'
                         f' expected one of {STATISTICS}.')
    if isinstance(x, Perm):
        value = _perm_stat(x.window, name)
    elif isinstance(x, SignedPerm):
        value = _signed_stat(x, name)
    elif isinstance(x, ColoredPerm):
        value = _colored_stat(x, name)
    elif isinstance(x, MultisetPerm):
        value = _multiset_stat(x, name)
    else:
        raise TypeError(f'x should be a group element, not {type(x)}.')
    if value is None:
        raise ValueError(f'statistic {name} does not apply to'
                         f' {type(x).__name__}')
    return value


def _left_larger(values):
    """t_i = #{j < i : values_j > values_i}."""
    return tuple(sum(1 for j in range(i) if values[j] > values[i])
                 for i in range(len(values)))


def phi(pi):
    """
    The Lehmer-type code t_i = #{j < i : pi_j > pi_i}.

    Parameters
    ----------
    pi : Perm

    Returns
    -------
    t : InvSeq
        Over s = (1, 2, ..., n), with D(pi) = A(t) and inv(pi) = |t|.
    """
    return InvSeq(_left_larger(pi.window), SSeq(tuple(range(1, pi.n + 1))))


def theta(x):
    """
    e_i = i * xi_i + t_i for a colored permutation.

    Parameters
    ----------
    x : ColoredPerm

    Returns
    -------
    e : InvSeq
        Over s = (k, 2k, ..., nk), with A(e) equal to the colored
        descent set and |e| = finv.
    """
    t = _left_larger(x.perm.window)
    e = tuple(i * c + ti for i, (c, ti) in enumerate(zip(x.colors, t),
                                                     start=1))
    return InvSeq(e, SSeq.arithmetic(x.k, x.n))


def psi(sigma):
    """
    e_i = t_i if sigma_i > 0, 2i - 1 - t_i otherwise, where
    t_i = #{j < i : |sigma_j| > |sigma_i|}.

    Parameters
    ----------
    sigma : SignedPerm

    Returns
    -------
    e : InvSeq
        Over s = (2, 4, ..., 2n).
    """
    t = _left_larger(tuple(abs(v) for v in sigma.window))
    e = tuple(ti if v > 0 else 2 * i - 1 - ti
              for i, (v, ti) in enumerate(zip(sigma.window, t), start=1))
    return InvSeq(e, SSeq.type_b(sigma.n))


def phi_properties(pi):
    t = phi(pi)
    return {'descents': set(descent_set(pi.window)) == ascent_set(t),
            'inv': inversions(pi.window) == sum(t.e)}


def theta_properties(x):
    e = theta(x)
    bundle = stats(e, k=x.k)
    return {'descents': set(wreath_descent_set(x)) == bundle.ascent_set,
            'finv': stat(x, 'finv') == bundle.weight,
            'fmaj': stat(x, 'fmaj') == bundle.ifmaj}


def psi_properties(sigma):
    """The five correspondences between sigma and psi(sigma); the two
    that involve sigma_1 + sigma_2 and sigma_{n-1} + sigma_n need
    n >= 2 and are reported as True below that."""
    w = sigma.window
    e = psi(sigma).e
    n = sigma.n
    checks = {'first_negative': (w[0] < 0) == (e[0] > 0),
              'last_positive': (w[-1] > 0) == (e[-1] < n),
              'descents': all((w[i - 1] > w[i])
                              == fraction_less(e[i - 1], i, e[i], i + 1)
                              for i in range(1, n)),
              'type_d_start': True,
              'affine_end': True}
    if n >= 2:
        checks['type_d_start'] = ((w[0] + w[1] < 0)
                                  == (2 * e[0] + e[1] >= 3))
        checks['affine_end'] = ((w[-2] + w[-1] > 0)
                                == (e[-2] * n + e[-1] * (n - 1)
                                    < (2 * n - 1) * (n - 1)))
    return checks


def group_size(group, n=None, k=None, multiset=None, signed=False):
    """Number of elements of a group or of a (signed) multiset's
    rearrangements."""
    if group == 'S':
        return factorial(n)
    if group == 'B':
        return 2**n * factorial(n)
    if group == 'D':
        return 2**max(n - 1, 0) * factorial(n)
    if group == 'wreath':
        return k**n * factorial(n)
    if group == 'multiset':
        size = factorial(len(multiset))
        for count in Counter(multiset).values():
            size //= factorial(count)
        return size * (2**len(multiset) if signed else 1)
    raise ValueError(f'unknown group {group!r}; expected one of {GROUPS}.')


def _unrank_perm(n, rank):
    remaining = list(range(1, n + 1))
    window = []
    for i in range(n - 1, -1, -1):
        index, rank = divmod(rank, factorial(i))
        window.append(remaining.pop(index))
    return tuple(window)


def _element(group, n, k, rank):
    if group == 'S':
        return Perm(_unrank_perm(n, rank))
    if group == 'B':
        rank, mask = divmod(rank, 2**n)
        window = _unrank_perm(n, rank)
        return SignedPerm(tuple(-v if mask >> i & 1 else v
                                for i, v in enumerate(window)))
    if group == 'D':
        rank, mask = divmod(rank, 2**max(n - 1, 0))
        window = _unrank_perm(n, rank)
        signs = [-1 if mask >> i & 1 else 1 for i in range(n - 1)]
        signs.append(-1 if signs.count(-1) % 2 else 1)
        return SignedPerm(tuple(v * s for v, s in zip(window, signs[:n])))
    if group == 'wreath':
        rank, digits = divmod(rank, k**n)
        colors = []
        for _ in range(n):
            digits, c = divmod(digits, k)
            colors.append(c)
        return ColoredPerm(Perm(_unrank_perm(n, rank)), tuple(colors), k)
    raise ValueError(f'unknown group {group!r}; expected one of {GROUPS}.')


def elements(group, n, k=None, start=0, stop=None, budget=None):
    """
    Stream the elements of S_n, B_n, D_n or Z_k wr S_n by rank.

    Parameters
    ----------
    group : str
        'S', 'B', 'D' or 'wreath'.
    n : int
    k : int or None
        Number of colors, for 'wreath'.
    start, stop : int
        Rank range.
    budget : int or None
        Enumeration budget override.

    Yields
    ------
    x : Perm, SignedPerm or ColoredPerm
    """
    if group == 'wreath' and (k is None or k < 1):
        raise ValueError('the wreath product needs k >= 1')
    size = group_size(group, n, k)
    check_budget(size, budget, 'group elements')
    stop = size if stop is None else min(stop, size)
    for rank in range(start, stop):
        yield _element(group, n, k, rank)


def permutations(n, budget=None):
    return elements('S', n, budget=budget)


def signed_permutations(n, even=False, budget=None):
    return elements('D' if even else 'B', n, budget=budget)


def colored_permutations(n, k, budget=None):
    return elements('wreath', n, k, budget=budget)


def _next_permutation(word):
    """Advance a list to its lexicographic successor in place; False
    after the last arrangement."""
    i = len(word) - 2
    while i >= 0 and word[i] >= word[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = len(word) - 1
    while word[j] <= word[i]:
        j -= 1
    word[i], word[j] = word[j], word[i]
    word[i + 1:] = reversed(word[i + 1:])
    return True


def multiset_permutations(multiset, signed=False, budget=None):
    """
    Stream the distinct rearrangements of a multiset, each with every
    sign pattern when signed.

    Parameters
    ----------
    multiset : sequence of int
    signed : bool
    budget : int or None

    Yields
    ------
    w : MultisetPerm
    """
    check_budget(group_size('multiset', multiset=multiset, signed=signed),
                 budget, 'words')
    word = sorted(multiset)
    patterns = (list(itertools.product((1, -1), repeat=len(word)))
                if signed else [None])
    while True:
        for signs in patterns:
            yield MultisetPerm(tuple(word), signs)
        if not _next_permutation(word):
            return


def _key(values):
    values = list(values)
    values += [0] * (3 - len(values))
    # slot order x, q, p; PQPoly keys are (x, p, q)
    return (values[0], values[2], values[1])


def _tally(stream, statistics):
    counts = Counter()
    for x in stream:
        counts[_key(stat(x, name) for name in statistics)] += 1
    return counts


def _tally_ranks(group, n, k, start, stop, statistics, budget):
    return _tally(elements(group, n, k, start, stop, budget), statistics)


def group_poly(group, n=None, k=None, statistics=('des',), multiset=None,
               signed=False, workers=1, budget=None):
    """
    Generating polynomial of statistics over a whole group.

    Parameters
    ----------
    group : str
        'S', 'B', 'D', 'wreath' or 'multiset'.
    n, k : int
        Rank and color count.
    statistics : sequence of str
        One to three names, recorded by x, q and p in that order.
    multiset : sequence of int
        The letters, for 'multiset'.
    signed : bool
        Sign every letter, for 'multiset'.
    workers : int
        Processes tallying contiguous rank ranges (groups only).
    budget : int or None

    Returns
    -------
    poly : PQPoly
    """
    statistics = tuple(statistics)
    if not 1 <= len(statistics) <= 3:
        raise ValueError('select one to three statistics (x, q, p)')
    if group == 'multiset':
        if multiset is None:
            raise ValueError('the multiset group needs its letters')
        return PQPoly(dict(_tally(multiset_permutations(multiset, signed,
                                                        budget),
                                  statistics)))
    size = group_size(group, n, k)
    check_budget(size, budget, 'group elements')
    ranges = partition_ranges(size, workers)
    logger.debug('tallying %s over %d elements of %s_%s in %d ranges',
                 statistics, size, group, n, len(ranges))
    if len(ranges) == 1:
        counts = _tally_ranks(group, n, k, *ranges[0], statistics, budget)
    else:
        counts = Counter()
        with ProcessPoolExecutor(max_workers=len(ranges)) as executor:
            futures = [executor.submit(_tally_ranks, group, n, k, a, b,
                                       statistics, budget)
                       for a, b in ranges]
            for future in futures:
                counts.update(future.result())
    return PQPoly(dict(counts))


def exc_cyc_poly(n, k, budget=None):
    """sum over S_n of x^exc k^(n - cyc), which is
    k^n A_n^{exc,cyc}(x, 1/k)."""
    if k < 1:
        raise ValueError(f'k should be >= 1, not {k}.')
    coeffs = [0] * max(n, 1)
    for pi in permutations(n, budget):
        coeffs[stat(pi, 'exc')] += k**(n - stat(pi, 'cyc'))
    return ExactPoly(coeffs)


def multiset_poly(multiset, signed=False, budget=None):
    """
    Descent polynomial over the distinct rearrangements of a multiset.

    Unsigned words have no descent at position 0. Signed words are
    compared in the usual order of the integers with sigma_0 = 0.

    Parameters
    ----------
    multiset : sequence of int
    signed : bool
    budget : int or None

    Returns
    -------
    poly : ExactPoly
    """
    return group_poly('multiset', statistics=('des',), multiset=multiset,
                      signed=signed, budget=budget).x_marginal()


def check_bijection(name, n, k=None, budget=None):
    """
    Run one of phi, theta, psi over its whole domain.

    Parameters
    ----------
    name : str
        'phi', 'theta' or 'psi'.
    n : int
    k : int or None
        Colors, for theta.
    budget : int or None

    Returns
    -------
    report : dict
        'size' of the domain, 'injective' when the images are
        distinct, and 'properties' mapping each property name to
        whether it held on every element.
    """
    if name == 'phi':
        domain, mapping, check = permutations(n, budget), phi, phi_properties
    elif name == 'theta':
        domain = colored_permutations(n, k, budget)
        mapping, check = theta, theta_properties
    elif name == 'psi':
        domain = signed_permutations(n, budget=budget)
        mapping, check = psi, psi_properties
    else:
        raise ValueError(f'unknown bijection {name!r}')
    images = set()
    properties = {}
    size = 0
    for x in domain:
        size += 1
        images.add(mapping(x).e)
        for key, held in check(x).items():
            properties[key] = properties.get(key, True) and held
    return {'size': size, 'injective': len(images) == size,
            'properties': properties}
