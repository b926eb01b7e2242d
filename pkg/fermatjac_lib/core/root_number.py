"""Global root numbers of J_{r,s,t;δ} as a product of local signs."""
import logging
from collections import namedtuple

from sympy import multiplicity

from fermatjac_lib.core import arith
from fermatjac_lib.core.utils import log_message

INFINITY_PLACE = 'inf'

class RootNumberReport(namedtuple('RootNumberReport', ('p', 'triple', 'delta', 'eps_inf', 'eps_p',
                                                       'eps_ell', 'u_X', 'd', 'eps'))):
    """Root number of J_{r,s,t;δ} with its local factors.

    Attributes:
     - eps_ell (tuple): Pairs (ell, sign) for the primes ell != p dividing delta.
     - u_X: u invariant of r^r s^s (t-p)^t δ^(r+s) (may be INFINITY).
     - d (int): Residue d, or None when u_X >= 2.
     - eps (int): Global root number.
    """
    __slots__ = ()

    def local_factors(self):
        factors = {INFINITY_PLACE: self.eps_inf, self.p: self.eps_p}
        factors.update(dict(self.eps_ell))
        return factors

    def to_dict(self):
        r, s, t = self.triple
        u_X = self.u_X if self.u_X != arith.INFINITY else 'inf'
        return {'p': self.p, 'r': r, 's': s, 't': t, 'delta': self.delta,
                'eps_inf': self.eps_inf, 'eps_p': self.eps_p,
                'eps_ell': [[ell, e] for ell, e in self.eps_ell],
                'u_X': u_X, 'd': self.d, 'global': self.eps}

    @classmethod
    def from_dict(cls, d):
        u_X = d.get('u_X')
        if u_X == 'inf':
            u_X = arith.INFINITY
        triple = arith.Triple(d['r'], d['s'], d['t'])
        return cls(d['p'], triple, d['delta'], d['eps_inf'], d['eps_p'],
                   tuple((ell, e) for ell, e in d['eps_ell']), u_X, d.get('d'), d['global'])

def _check(triple, delta, p):
    if not isinstance(triple, arith.Triple):
        triple = arith.Triple(*triple)
    if p is None:
        p = triple.p
    if triple.p != p:
        raise ValueError('Triple %r does not sum to %d' % (tuple(triple), p))
    return triple, arith.reduce_delta(delta, p).delta

def _epsilon_at_p(triple, delta, p):
    decomposition = arith.u_of(arith.x_value(triple, delta), p)
    u_X = decomposition.u
    if u_X >= 2:
        return arith.legendre(-2, p), u_X, None
    d = arith.d_value(triple, delta, p)
    rstd = triple.r * triple.s * triple.t * d
    if u_X == 0:
        return -arith.legendre(-rstd, p), u_X, d
    return -arith.legendre(rstd, p), u_X, d

def epsilon_local(place, triple, delta, p=None):
    """Local root number at place ('inf' or a rational prime)."""
    triple, delta = _check(triple, delta, p)
    p = triple.p
    if place == INFINITY_PLACE:
        return arith.legendre(-1, p)
    if place == p:
        return _epsilon_at_p(triple, delta, p)[0]
    if delta % place == 0:
        return arith.legendre(place, p)
    return 1

def epsilon_global(triple, delta, p=None, factorization=None):
    """Root number of J_{r,s,t;δ} over Q.

    Args:
        factorization (dict): Optional factorization of |delta|, used by scans
            that sieve their factorizations.
    """
    if not isinstance(triple, arith.Triple):
        triple = arith.Triple(*triple)
    if p is None:
        p = triple.p
    if triple.p != p:
        raise ValueError('Triple %r does not sum to %d' % (tuple(triple), p))
    reduced = arith.reduce_delta(delta, p, factorization)
    delta = reduced.delta
    eps_ell = tuple((ell, arith.legendre(ell, p)) for ell in sorted(reduced.factorization) if ell != p)
    eps_p, u_X, d = _epsilon_at_p(triple, delta, p)
    eps_inf = arith.legendre(-1, p)
    eps = eps_inf * eps_p
    for _, e in eps_ell:
        eps *= e
    log_message('root_number', 'eps(%s, delta=%d) = %+d' % (tuple(triple), delta, eps), logging.DEBUG)
    return RootNumberReport(p, triple, delta, eps_inf, eps_p, eps_ell, u_X, d, eps)

def epsilon_p3(delta):
    """Local sign at 3 for x^3 + y^3 = delta, delta cube-free."""
    delta = arith.reduce_delta(delta, 3).delta
    if multiplicity(3, abs(delta)) == 1 or delta % 9 in (1, 8):
        return -1
    return 1

def weierstrass_p3(delta):
    """(a, b) with C_δ isomorphic to y^2 = x^3 + a·x + b."""
    delta = arith.reduce_delta(delta, 3).delta
    return 0, -432 * delta * delta

AlphaTau = namedtuple('AlphaTau', ('alpha', 'tau', 'eps'))

def alpha_tau(triple, delta, p=None, factorization=None):
    """Split eps = (-1)^(alpha + tau), tau counting the nonresidue primes of delta."""
    report = epsilon_global(triple, delta, p, factorization)
    tau = sum(1 for _, e in report.eps_ell if e == -1)
    alpha = 0 if report.eps * (-1) ** tau == 1 else 1
    return AlphaTau(alpha, tau, report.eps)

def conductor_exponents(triple, delta, p=None):
    triple, delta = _check(triple, delta, p)
    p = triple.p
    u_X = arith.u_of(arith.x_value(triple, delta), p).u
    if u_X >= 2:
        c_pi = 1
    elif u_X == 1:
        c_pi = 2
    else:
        c_pi = p + 1
    c_V = dict((ell, 1) for ell in arith.reduce_delta(delta, p).factorization if ell != p)
    return {'c_Pi': c_pi, 'n_Pi': 1, 'c_V': c_V}
