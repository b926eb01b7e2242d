"""Root-number statistics over p-th-power-free δ."""
import logging
from collections import namedtuple
from concurrent.futures import ProcessPoolExecutor

from sympy import primerange, integer_nthroot

from fermatjac_lib.core import arith
from fermatjac_lib.core.errors import ConsistencyError
from fermatjac_lib.core.root_number import alpha_tau
from fermatjac_lib.core.utils import log_message

DENSITY_FIELDS = ('delta', 'ord_p', 'delta0_mod_p2', 'tau', 'alpha', 'eps')

def enumerate_pth_power_free(X, p):
    """Yield 1 <= delta <= X in increasing order with no q^p dividing delta."""
    if X < 1:
        return
    excluded = bytearray(X + 1)
    bound = integer_nthroot(X, p)[0]
    for q in primerange(2, bound + 1):
        step = q ** p
        excluded[step::step] = b'\x01' * (X // step)
    for delta in range(1, X + 1):
        if not excluded[delta]:
            yield delta

def smallest_prime_factors(X):
    spf = list(range(X + 1))
    for q in range(2, integer_nthroot(X, 2)[0] + 1):
        if spf[q] == q:
            for m in range(q * q, X + 1, q):
                if spf[m] == m:
                    spf[m] = q
    return spf

def _factor(n, spf):
    factors = {}
    while n > 1:
        q = spf[n]
        factors[q] = factors.get(q, 0) + 1
        n //= q
    return factors

DensityClass = namedtuple('DensityClass', ('ord_p', 'delta0_mod_p2', 'n', 'n_plus', 'alpha'))

class DensityReport(namedtuple('DensityReport', ('p', 'triple', 'X', 'n_total', 'n_plus',
                                                 'fraction', 'breakdown', 'rows'))):
    """Counts of root numbers +1 among p-th-power-free delta <= X.

    Attributes:
     - breakdown (list): DensityClass per (ord_p delta, delta0 mod p^2).
     - rows (list): Per-delta records, or None.
    """
    __slots__ = ()

    def to_dict(self):
        d = {'p': self.p, 'r': self.triple[0], 's': self.triple[1], 't': self.triple[2],
             'X': self.X, 'n_total': self.n_total, 'n_plus': self.n_plus,
             'fraction': self.fraction,
             'breakdown': [c._asdict() for c in self.breakdown]}
        if self.rows is not None:
            d['rows'] = list(self.rows)
        return d

    def summary_row(self):
        return {'p': self.p, 'triple': '%d:%d:%d' % tuple(self.triple), 'X': self.X,
                'n_total': self.n_total, 'n_plus': self.n_plus, 'fraction': '%.4f' % self.fraction}

    def within(self, tolerance):
        return abs(self.fraction - 0.5) <= tolerance

def _scan_range(p, triple, lo, hi, spf):
    rows = []
    modulus = p * p
    for delta in enumerate_pth_power_free(hi, p):
        if delta < lo:
            continue
        factorization = _factor(delta, spf)
        ord_p = factorization.get(p, 0)
        split = alpha_tau(triple, delta, p, factorization)
        rows.append({'delta': delta, 'ord_p': ord_p,
                     'delta0_mod_p2': (delta // p ** ord_p) % modulus,
                     'tau': split.tau, 'alpha': split.alpha, 'eps': split.eps})
    return rows

def _partition(X, parts):
    size = -(-X // parts)
    return [(lo, min(X, lo + size - 1)) for lo in range(1, X + 1, size)]

def density_experiment(p, triple, X, per_delta=False, workers=1):
    """Fraction of delta <= X with root number +1, with its breakdown by p-adic class.

    Raises:
        ConsistencyError: alpha varies inside one (ord_p, delta0 mod p^2) class.
    """
    if not isinstance(triple, arith.Triple):
        triple = arith.Triple(*triple)
    if triple.p != p:
        raise ValueError('Triple %r does not sum to %d' % (tuple(triple), p))
    if X < 1:
        raise ValueError('X must be positive')
    spf = smallest_prime_factors(X)
    if workers and workers > 1:
        ranges = _partition(X, workers)
        with ProcessPoolExecutor(max_workers=workers) as executor:
            futures = [executor.submit(_scan_range, p, triple, lo, hi, spf) for lo, hi in ranges]
            rows = []
            for future in futures:
                rows.extend(future.result())
    else:
        rows = _scan_range(p, triple, 1, X, spf)

    classes = {}
    for row in rows:
        key = (row['ord_p'], row['delta0_mod_p2'])
        entry = classes.setdefault(key, [0, 0, set()])
        entry[0] += 1
        entry[1] += row['eps'] == 1
        entry[2].add(row['alpha'])
    breakdown = []
    for (ord_p, residue), (n, n_plus, alphas) in sorted(classes.items()):
        if len(alphas) != 1:
            raise ConsistencyError('alpha is not constant on the class (ord_p=%d, delta0=%d mod %d)'
                                   % (ord_p, residue, p * p), {'alphas': sorted(alphas)})
        breakdown.append(DensityClass(ord_p, residue, n, n_plus, alphas.pop()))

    n_total = len(rows)
    n_plus = sum(1 for row in rows if row['eps'] == 1)
    if sum(c.n for c in breakdown) != n_total or sum(c.n_plus for c in breakdown) != n_plus:
        raise ConsistencyError('Class breakdown does not add up to the totals')
    fraction = float(n_plus) / n_total
    log_message('density', 'p=%d %s X=%d: %d of %d have eps=+1 (%.4f)'
                % (p, tuple(triple), X, n_plus, n_total, fraction))
    return DensityReport(p, triple, X, n_total, n_plus, fraction, breakdown,
                         rows if per_delta else None)
