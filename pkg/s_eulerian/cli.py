"""Command line interface.

Every sub-command prints one report, either as JSON tagged with the
schema version or as an aligned text table, and returns

    0 when the value was computed or the property verified,
    1 when a checked property failed,
    2 on bad arguments or an exceeded enumeration budget.
"""

# Built-in imports
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
import argparse
import json
import logging
import sys
import time

# Local imports
from s_eulerian import eulerian, geometry, groups, invseq, polyx
from s_eulerian.constants import SCHEMA, worker_count
from s_eulerian.invseq import BudgetExceededError, SSeq
from s_eulerian.miscellaneous import clear_line, parse_int_list, \
    parse_rational
from s_eulerian.polyx import ExactPoly, NotRealRootedError, PQPoly

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


class UsageError(ValueError):
    """Raised for argument combinations argparse cannot reject on its
    own."""


@dataclass
class RunReport:
    command: str
    parameters: dict
    result: dict = field(default_factory=dict)
    exit_code: int = EXIT_OK
    wall_time: float = 0.0
    rows: list = field(default_factory=list)

    def to_json(self):
        return {'schema': SCHEMA, 'command': self.command,
                'parameters': self.parameters, 'result': self.result,
                'exit_code': self.exit_code,
                'wall_time': round(self.wall_time, 6)}

    def render(self, output_format):
        if output_format == 'json':
            return json.dumps(self.to_json(), sort_keys=True, indent=2)
        rows = [('command', self.command)] + self.rows
        rows.append(('exit code', str(self.exit_code)))
        width = max(len(label) for label, _ in rows)
        return '\n'.join(f'{label.ljust(width)}  {text}'
                         for label, text in rows)


def _display(poly):
    """Factored form of an integer polynomial when all its roots are
    rational, expanded form otherwise."""
    if isinstance(poly, PQPoly):
        return str(poly)
    if poly.is_zero:
        return '0'
    factored = polyx.factored_form(poly)
    return factored if factored is not None else str(poly)


def _parse_poly(text):
    try:
        return ExactPoly([parse_rational(c) for c in text.split(',')])
    except ValueError:
        raise UsageError(f'{text!r} is not a comma separated coefficient'
                         ' list, constant term first')


def _family(args):
    """The refined family a compute-style argument set describes."""
    kind = args.kind
    if kind in ('standard', 'pq'):
        if args.s is None:
            raise UsageError(f'--kind {kind} needs --s')
        s = SSeq.parse(args.s)
        n = len(s) if args.n is None else args.n
        if kind == 'standard':
            return eulerian.refined(s, n)
        return eulerian.refined_pq(s, n)
    if args.n is None:
        raise UsageError(f'--kind {kind} needs --n')
    if kind == 'typeD':
        return eulerian.t_refined(args.n)
    if args.k is None:
        raise UsageError('--kind fmaj needs --k')
    return eulerian.fmaj_refined(args.n, args.k)


def _family_polys(args, family):
    if args.p is None and args.q is None:
        return list(family.polys)
    p = parse_rational(args.p if args.p is not None else 1)
    q = parse_rational(args.q if args.q is not None else 1)
    return eulerian.specialize(family, p, q)


def _group_statistics(args):
    return tuple(args.stat.split(',')) if args.stat else ('des',)


def _target_polys(args):
    """(label, polynomials) for commands that accept --input or a
    compute specification."""
    if args.input is not None:
        return 'input', [_parse_poly(args.input)]
    if args.multiset is not None:
        return 'multiset', [groups.multiset_poly(
            parse_int_list(args.multiset), args.signed)]
    if args.group is not None:
        poly = groups.group_poly(args.group, args.n, args.k,
                                 _group_statistics(args)[:1])
        return args.group, [poly.x_marginal()]
    family = _family(args)
    polys = _family_polys(args, family)
    if any(isinstance(p, PQPoly) for p in polys):
        raise UsageError('specialize pq and fmaj families with --p/--q'
                         ' before certifying')
    return family.kind, polys


def cmd_compute(args, report):
    if args.multiset is not None:
        letters = parse_int_list(args.multiset)
        poly = groups.multiset_poly(letters, args.signed)
        report.result = {'multiset': letters, 'signed': args.signed,
                         'poly': poly.to_json()}
        report.rows.append(('poly', _display(poly)))
        return
    if args.group is not None:
        statistics = _group_statistics(args)
        poly = groups.group_poly(args.group, args.n, args.k, statistics,
                                 workers=worker_count())
        if len(statistics) == 1:
            poly = poly.x_marginal()
        report.result = {'group': args.group, 'statistics': list(statistics),
                         'poly': poly.to_json()}
        report.rows.append(('poly', _display(poly)))
        return
    if args.kind == 'typeD' and args.n == 1:
        total = eulerian.t_poly(1)
        report.result = {'kind': 'typeD', 'n': 1, 'total': total.to_json(),
                         'D': eulerian.d_poly(1).to_json()}
        report.rows.append(('total', _display(total)))
        return
    family = _family(args)
    polys = _family_polys(args, family)
    total = sum(polys[1:], polys[0])
    report.result = {'kind': family.kind, 'n': family.n,
                     's': family.s.to_json(), 'total': total.to_json()}
    if family.kind == 'typeD' and args.p is None and args.q is None:
        report.result['D'] = total.quo_scalar(2).to_json()
    report.rows.append(('total', _display(total)))
    if args.refined:
        report.result['polys'] = [p.to_json() for p in polys]
        for i, p in enumerate(polys):
            report.rows.append((f'[{i}]', _display(p)))


def cmd_certify(args, report):
    check = args.check
    if check == 'interlace-chain':
        if args.s is None:
            raise UsageError('--check interlace-chain needs --s')
        s = SSeq.parse(args.s)
        n = len(s) if args.n is None else args.n
        passed = eulerian.interlace_chain(s, n)
        report.result = {'check': check, 'passed': passed}
        report.rows.append(('interlaces', str(passed)))
    elif check == 'refined-interlacing':
        family = _family(args)
        try:
            passed = eulerian.refined_interlacing(family)
        except NotRealRootedError as error:
            passed = False
            report.result['error'] = str(error)
        report.result.update({'check': check, 'passed': passed})
        report.rows.append(('interlaces', str(passed)))
    else:
        label, polys = _target_polys(args)
        if not args.refined:
            polys = [sum(polys[1:], polys[0])]
        results = []
        passed = True
        for poly in polys:
            outcome = _certify_one(check, poly)
            passed = passed and outcome['passed']
            results.append(outcome)
            report.rows.append((_display(poly), outcome['summary']))
        if check == 'compatible':
            try:
                compatible = polyx.certify_compatible(polys)
            except NotRealRootedError:
                compatible = False
            passed = passed and compatible
            report.rows.append(('compatible', str(compatible)))
        report.result = {'check': check, 'target': label,
                         'passed': passed,
                         'polys': [r['detail'] for r in results]}
    if not report.result['passed']:
        report.exit_code = EXIT_FAILED


def _certify_one(check, poly):
    if check in ('real-rooted', 'compatible'):
        certificate = polyx.certify_real_rooted(poly)
        return {'passed': certificate.is_real_rooted,
                'summary': (f'{certificate.real_root_count_with_multiplicity}'
                            f' of {certificate.degree} roots real'),
                'detail': certificate.to_json()}
    if check == 'gamma':
        try:
            gamma = polyx.gamma_expansion(poly)
        except polyx.NotPalindromicError as error:
            return {'passed': False, 'summary': str(error),
                    'detail': {'error': str(error)}}
        return {'passed': gamma.nonnegative,
                'summary': 'gamma = ' + str([str(g) for g in gamma.gammas]),
                'detail': gamma.to_json()}
    if check == 'shape':
        shape = polyx.coeff_shape(poly.coeffs)
        return {'passed': shape.unimodal and shape.log_concave,
                'summary': (f'unimodal {shape.unimodal},'
                            f' log-concave {shape.log_concave}'),
                'detail': shape.to_json()}
    raise UsageError(f'unknown check {check!r}')


def _verify_cases(suite, max_n, max_k, t_max):
    """(name, function, arguments) triples in a fixed order."""
    cases = []

    def add(name, function, *arguments):
        cases.append((name, function, arguments))

    if suite == 'oracle':
        for n in range(1, max_n + 1):
            families = [SSeq(tuple(range(1, n + 1))), SSeq.type_b(n),
                        SSeq(tuple(range(1, 2 * n, 2)))]
            families += [SSeq.constant(k, n) for k in range(2, max_k + 1)]
            for s in families:
                add(f'refined {s.s}', _standard_matches_oracle, s)
                add(f'pq {s.s}', _pq_matches_oracle, s)
            for k in range(1, max_k + 1):
                add(f'fmaj n={n} k={k}', _fmaj_matches_oracle, n, k)
                add(f'wreath n={n} k={k}', _wreath_matches_oracle, n, k)
            if n >= 2:
                add(f'typeD n={n}', _type_d_matches_oracle, n)
    elif suite == 'ehrhart':
        for n in range(1, max_n + 1):
            for s in (SSeq(tuple(range(1, n + 1))), SSeq.type_b(n),
                      SSeq.arithmetic(3, n), SSeq(tuple(range(1, 2 * n, 2)))):
                add(f'ehrhart {s.s}', _ehrhart_holds, s, t_max)
    elif suite == 'bijections':
        for n in range(1, max_n + 1):
            add(f'phi n={n}', _bijection_holds, 'phi', n, None)
            add(f'psi n={n}', _bijection_holds, 'psi', n, None)
            for k in range(1, max_k + 1):
                add(f'theta n={n} k={k}', _bijection_holds, 'theta', n, k)
    elif suite == 'identities':
        for n in range(1, max_n + 1):
            add(f'signedB n={n}', geometry.series_identity_check,
                'signedB', n, None, t_max)
            for k in range(1, max_k + 1):
                add(f'kary n={n} k={k}', geometry.series_identity_check,
                    'kary', n, k, t_max)
                add(f'exc-cyc n={n} k={k}', _exc_cyc_holds, n, k)
            if n <= 3:
                add(f'multiset2 n={n}', geometry.series_identity_check,
                    'multiset2', n, None, t_max)
            if n <= 2:
                add(f'signedMultiset n={n}', geometry.series_identity_check,
                    'signedMultiset', n, None, t_max)
            add(f'maj-comaj n={n}', _maj_comaj_holds, n)
            if n >= 2:
                add(f'involution n={n}', _involution_holds, n)
                add(f'affine B n={n}', _affine_b_holds, n)
    else:
        raise UsageError(f'unknown suite {suite!r}')
    return cases


def _standard_matches_oracle(s):
    return (eulerian.e_poly(s, len(s))
            == invseq.oracle_x_poly(s, 'asc'))


def _pq_matches_oracle(s):
    return (eulerian.refined_pq(s, len(s)).total()
            == invseq.oracle_poly(s, ('asc', 'amaj', 'weight')))


def _fmaj_matches_oracle(n, k):
    total = eulerian.fmaj_refined(n, k).total()
    return (total == invseq.oracle_poly(SSeq.arithmetic(k, n),
                                        ('asc', 'ifmaj'))
            and total == groups.group_poly('wreath', n, k,
                                           ('des_wreath', 'fmaj')))


def _wreath_matches_oracle(n, k):
    return (groups.group_poly('wreath', n, k, ('des_wreath',)).x_marginal()
            == eulerian.e_poly(SSeq.arithmetic(k, n), n))


def _type_d_matches_oracle(n):
    t = eulerian.t_poly(n)
    return (t == invseq.oracle_x_poly(SSeq.type_b(n), 'asc_d')
            and t == groups.group_poly('B', n, None,
                                       ('des_D',)).x_marginal())


def _ehrhart_holds(s, t_max):
    data = geometry.ehrhart_data(s, len(s), t_max)
    return data.agrees and geometry.has_vanishing_differences(data.counts,
                                                              len(s))


def _bijection_holds(name, n, k):
    outcome = groups.check_bijection(name, n, k)
    return outcome['injective'] and all(outcome['properties'].values())


def _exc_cyc_holds(n, k):
    return (groups.exc_cyc_poly(n, k)
            == eulerian.e_poly(SSeq.exc_cyc(k, n), n))


def _maj_comaj_holds(n):
    s = SSeq(tuple(range(1, n + 1)))
    pq = eulerian.refined_pq(s, n).total()
    by_maj = groups.group_poly('S', n, None, ('des', 'maj'))
    by_comaj = groups.group_poly('S', n, None, ('des', 'comaj'))
    return (by_maj == by_comaj == eulerian.q_eulerian(pq, n, 'maj')
            == eulerian.q_eulerian(pq, n, 'comaj'))


def _involution_holds(n):
    return (groups.group_poly('D', n, None, ('des_D',)).x_marginal()
            == eulerian.d_poly(n))


def _affine_b_holds(n):
    poly = eulerian.affine_b_poly(n)
    return (groups.group_poly('B', n, None,
                              ('affine_des_B',)).x_marginal() == poly
            and polyx.certify_real_rooted(poly).is_real_rooted)


def _run_case(case):
    name, function, arguments = case
    try:
        return name, bool(function(*arguments)), None
    except NotRealRootedError as error:
        return name, False, str(error)


def cmd_verify(args, report):
    cases = _verify_cases(args.suite, args.max_n, args.max_k, args.t_max)
    outcomes = []
    with ProcessPoolExecutor(max_workers=worker_count()) as executor:
        for i, outcome in enumerate(executor.map(_run_case, cases), start=1):
            if args.verbose:
                print(f'case {i}/{len(cases)}: {outcome[0]}', end='\r',
                      file=sys.stderr)
            outcomes.append(outcome)
    if args.verbose:
        clear_line(stream=sys.stderr)
    results = []
    for name, passed, error in outcomes:
        entry = {'case': name, 'passed': passed}
        if error is not None:
            entry['error'] = error
        results.append(entry)
        report.rows.append((name, 'pass' if passed else 'FAIL'))
        logger.debug('%s: %s', name, passed)
    report.result = {'suite': args.suite, 'cases': results,
                     'passed': all(r['passed'] for r in results)}
    if not report.result['passed']:
        report.exit_code = EXIT_FAILED


def cmd_conjecture(args, report):
    n = args.n
    if args.name == 'signed-multiset':
        letters = [i for i in range(1, n + 1) for _ in range(2)]
        words = groups.multiset_poly(letters, signed=True)
        sequences = eulerian.e_poly(SSeq.signed_multiset_pairs(n), 2 * n)
        equal = words == sequences
        report.result = {'name': args.name, 'n': n,
                         'words': words.to_json(),
                         'sequences': sequences.to_json(), 'equal': equal}
        report.rows += [('signed words', _display(words)),
                        ('inversion sequences', _display(sequences)),
                        ('equal', str(equal))]
        if not equal:
            report.exit_code = EXIT_FAILED
    elif args.name == 'affine-D':
        if n < 2:
            raise UsageError('affine-D needs --n >= 2')
        poly = groups.group_poly('D', n, None,
                                 ('affine_des_D',)).x_marginal()
        oracle = invseq.oracle_x_poly(SSeq.type_b(n), 'affine_asc_d')
        certificate = polyx.certify_real_rooted(poly)
        report.result = {'name': args.name, 'n': n, 'poly': poly.to_json(),
                         'matches_inversion_sequences': poly * 2 == oracle,
                         'certificate': certificate.to_json()}
        report.rows += [('poly', _display(poly)),
                        ('real-rooted', str(certificate.is_real_rooted))]
        if not certificate.is_real_rooted:
            report.exit_code = EXIT_FAILED
    else:
        raise UsageError(f'unknown conjecture {args.name!r}')


def cmd_ehrhart(args, report):
    s = SSeq.parse(args.s)
    n = len(s) if args.n is None else args.n
    data = geometry.ehrhart_data(s, n, args.t_max)
    shape = geometry.hstar_shape(s, n)
    report.result = data.to_json()
    report.result['shape'] = shape.to_json()
    report.result['polynomial_counts'] = geometry.has_vanishing_differences(
        data.counts, n)
    report.rows += [('h*', _display(data.hstar)),
                    ('counts', ' '.join(str(c) for c in data.counts)),
                    ('agrees', str(data.agrees))]
    if not data.agrees:
        report.exit_code = EXIT_FAILED


def cmd_identity(args, report):
    multiplicities = (parse_int_list(args.multiplicities)
                      if args.multiplicities else None)
    numerator, series, closed = geometry.series_identity(
        args.kind, args.n, args.k, args.t_max, multiplicities)
    holds = series == closed
    report.result = {'kind': args.kind, 'numerator': numerator.to_json(),
                     'series': [str(c) for c in series],
                     'closed_form': [str(c) for c in closed],
                     'holds': holds}
    report.rows += [('numerator', _display(numerator)),
                    ('holds', str(holds))]
    if not holds:
        report.exit_code = EXIT_FAILED


COMMANDS = {'compute': cmd_compute, 'certify': cmd_certify,
            'verify': cmd_verify, 'conjecture': cmd_conjecture,
            'ehrhart': cmd_ehrhart, 'identity': cmd_identity}


def _add_spec_arguments(parser):
    parser.add_argument('--s', help='bounding sequence, e.g. 1,3,5')
    parser.add_argument('--n', type=int)
    parser.add_argument('--k', type=int)
    parser.add_argument('--kind', default='standard', choices=eulerian.KINDS)
    parser.add_argument('--refined', action='store_true',
                        help='report every refined polynomial')
    parser.add_argument('--p', help='positive rational value for p')
    parser.add_argument('--q', help='positive rational value for q')
    parser.add_argument('--group', choices=groups.GROUPS[:-1])
    parser.add_argument('--stat', help='comma separated group statistics')
    parser.add_argument('--multiset', help='letters, e.g. 1,1,2,2')
    parser.add_argument('--signed', action='store_true')


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', default='json', choices=('json', 'table'))
    common.add_argument('--verbose', action='store_true',
                        help='log progress to stderr')

    parser = argparse.ArgumentParser(
        prog='s-eulerian',
        description='Exact s-Eulerian polynomials, certificates and'
                    ' enumeration oracles.')
    commands = parser.add_subparsers(dest='command', required=True)

    compute = commands.add_parser('compute', parents=[common])
    _add_spec_arguments(compute)

    certify = commands.add_parser('certify', parents=[common])
    _add_spec_arguments(certify)
    certify.add_argument('--input', help='coefficients, constant term first')
    certify.add_argument('--check', default='real-rooted',
                         choices=('real-rooted', 'interlace-chain',
                                  'refined-interlacing', 'compatible',
                                  'gamma', 'shape'))

    verify = commands.add_parser('verify', parents=[common])
    verify.add_argument('--suite', required=True,
                        choices=('oracle', 'ehrhart', 'bijections',
                                 'identities'))
    verify.add_argument('--max-n', type=int, default=4)
    verify.add_argument('--max-k', type=int, default=2)
    verify.add_argument('--t-max', type=int, default=8)

    conjecture = commands.add_parser('conjecture', parents=[common])
    conjecture.add_argument('--name', required=True,
                            choices=('signed-multiset', 'affine-D'))
    conjecture.add_argument('--n', type=int, required=True)

    ehrhart = commands.add_parser('ehrhart', parents=[common])
    ehrhart.add_argument('--s', required=True)
    ehrhart.add_argument('--n', type=int)
    ehrhart.add_argument('--t-max', type=int, default=8)

    identity = commands.add_parser('identity', parents=[common])
    identity.add_argument('--kind', required=True,
                          choices=geometry.SERIES_KINDS)
    identity.add_argument('--n', type=int, required=True)
    identity.add_argument('--k', type=int)
    identity.add_argument('--t-max', type=int, default=10)
    identity.add_argument('--multiplicities',
                          help='letter multiplicities for macmahon')
    return parser


def main(argv=None):
    """
    Run one sub-command and print its report.

    Parameters
    ----------
    argv : list of str or None
        Arguments without the program name; None reads sys.argv.

    Returns
    -------
    exit_code : int
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_request:
        return exit_request.code if isinstance(exit_request.code, int) \
            else EXIT_USAGE
    if args.verbose:
        logging.basicConfig(level=logging.DEBUG, stream=sys.stderr)
    parameters = {key: value for key, value in sorted(vars(args).items())
                  if key not in ('command', 'format', 'verbose')}
    report = RunReport(args.command, parameters)
    started = time.perf_counter()
    try:
        COMMANDS[args.command](args, report)
    except NotRealRootedError as error:
        report.result = {'error': str(error)}
        report.exit_code = EXIT_FAILED
        report.rows.append(('error', str(error)))
    except (UsageError, BudgetExceededError, ValueError) as error:
        report.result = {'error': str(error)}
        report.exit_code = EXIT_USAGE
        report.rows.append(('error', str(error)))
    except Exception as error:
        logger.exception('%s stopped on an unexpected error', args.command)
        message = f'{type(error).__name__}: {error}'
        report.result = {'error': message}
        report.exit_code = EXIT_USAGE
        report.rows.append(('error', message))
    report.wall_time = time.perf_counter() - started
    print(report.render(args.format))
    return report.exit_code


def run():
    sys.exit(main())


if __name__ == '__main__':
    run()
