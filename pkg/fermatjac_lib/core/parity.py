"""Parity checks: the root number against (-1)^S for the Selmer rank quantity S."""
import logging
from collections import namedtuple, Counter
from concurrent.futures import ProcessPoolExecutor

from fermatjac_lib.core import arith, selmer
from fermatjac_lib.core.density import enumerate_pth_power_free
from fermatjac_lib.core.errors import HypothesisError, ConsistencyError
from fermatjac_lib.core.root_number import epsilon_global
from fermatjac_lib.core.utils import log_message

PARITY_FIELDS = ('p', 'r', 's', 't', 'delta', 'eps', 'S', 'holds')

ParityResult = namedtuple('ParityResult', ('triple', 'delta', 'eps', 'S', 'holds'))

def parity_check(triple, delta, p=None):
    """Compare eps(J_{r,s,t;δ}) with (-1)^S.

    The root number is taken on the representative (r', 1, p-r'-1) of the
    orbit of triple, which is also the triple the Selmer computation uses.

    Raises:
        HypothesisError: p irregular, p < 5, p | delta or a split prime factor.
    """
    if not isinstance(triple, arith.Triple):
        triple = arith.Triple(*triple)
    if p is None:
        p = triple.p
    if triple.p != p:
        raise ValueError('Triple %r does not sum to %d' % (tuple(triple), p))
    reduced = triple.reduced()[1]
    S = selmer.selmer_rank_S(reduced.r, delta, p)
    eps = epsilon_global(reduced, delta, p).eps
    return ParityResult(triple, arith.reduce_delta(delta, p).delta, eps, S, eps == (-1) ** S)

def reduced_triples(p):
    return [arith.Triple(r, 1, p - r - 1) for r in range(1, p - 1)]

def parity_report_to_rows(results):
    rows = []
    for result in results:
        r, s, t = result.triple
        rows.append({'p': r + s + t, 'r': r, 's': s, 't': t, 'delta': result.delta,
                     'eps': result.eps, 'S': result.S, 'holds': result.holds})
    return rows

class ParityScanReport(namedtuple('ParityScanReport', ('p', 'delta_max', 'cases', 'holds',
                                                       'failures', 'filtered', 'results'))):
    """Outcome of a parity scan.

    Attributes:
     - cases (int): Number of (triple, delta) pairs checked.
     - filtered (dict): Count of delta values skipped per unmet hypothesis.
    """
    __slots__ = ()

    def to_dict(self):
        return {'p': self.p, 'delta_max': self.delta_max, 'cases': self.cases,
                'holds': self.holds, 'failures': self.failures,
                'filtered': dict(self.filtered), 'rows': parity_report_to_rows(self.results)}

    def rows(self):
        return parity_report_to_rows(self.results)

def _scan_deltas(p, deltas, triples):
    results = []
    filtered = Counter()
    for delta in deltas:
        record = selmer.hypotheses(1, delta, p)
        failed = [k for k, v in sorted(record.items()) if not v]
        if failed:
            filtered[failed[0]] += 1
            continue
        for triple in triples:
            results.append(parity_check(triple, delta, p))
    return results, filtered

def parity_scan(p, delta_max, triples=None, workers=1):
    """Check parity for every admissible p-th-power-free delta <= delta_max.

    Raises:
        HypothesisError: p irregular or p < 5.
        ConsistencyError: some case violates parity; details hold the failing rows.
    """
    arith.check_odd_prime(p)
    if p < 5 or not arith.is_regular(p):
        raise HypothesisError('parity scans need a regular prime p >= 5 (p=%d)' % p)
    if triples is None:
        triples = reduced_triples(p)
    triples = [t if isinstance(t, arith.Triple) else arith.Triple(*t) for t in triples]
    deltas = list(enumerate_pth_power_free(delta_max, p))

    if workers and workers > 1 and len(deltas) > workers:
        chunks = [deltas[i::workers] for i in range(workers)]
        results, filtered = [], Counter()
        with ProcessPoolExecutor(max_workers=workers) as executor:
            for chunk_results, chunk_filtered in executor.map(_scan_deltas, [p] * workers,
                                                              chunks, [triples] * workers):
                results.extend(chunk_results)
                filtered.update(chunk_filtered)
        results.sort(key=lambda x: (x.delta, tuple(x.triple)))
    else:
        results, filtered = _scan_deltas(p, deltas, triples)

    log_message('parity', 'p=%d: %d delta values skipped by hypotheses %s'
                % (p, sum(filtered.values()), dict(filtered)))
    failures = [result for result in results if not result.holds]
    if failures:
        log_message('parity', '%d parity failures for p=%d' % (len(failures), p), logging.ERROR)
        raise ConsistencyError('Parity fails in %d cases for p=%d' % (len(failures), p),
                               {'failures': parity_report_to_rows(failures)})
    log_message('parity', 'p=%d: parity holds in %d cases' % (p, len(results)))
    return ParityScanReport(p, delta_max, len(results), len(results), 0, dict(filtered), results)
