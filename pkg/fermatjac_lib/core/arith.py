"""Rational-integer and modular arithmetic.

Legendre symbols, splitting of rational primes in Q(ω), the p-adic
invariants u, d and B, Bernoulli numbers mod p and regularity.
"""
import math
from collections import namedtuple
from fractions import Fraction

from sympy import isprime, factorint, multiplicity, GF
from sympy.functions.combinatorial.numbers import legendre_symbol
from sympy.ntheory import n_order
from sympy.polys.matrices import DomainMatrix

from fermatjac_lib.core.errors import HypothesisError

INFINITY = float('inf')

def check_odd_prime(p):
    if not isinstance(p, int) or p < 3 or not isprime(p):
        raise ValueError('%r is not an odd prime' % (p,))

class Triple(namedtuple('Triple', ('r', 's', 't'))):
    """Exponent triple (r, s, t) with r, s, t > 0 and r + s + t = p.

    The prime p is the sum of the entries.
    """
    __slots__ = ()

    def __new__(cls, r, s, t):
        r, s, t = int(r), int(s), int(t)
        if min(r, s, t) <= 0:
            raise ValueError('Triple entries must be positive: (%d, %d, %d)' % (r, s, t))
        check_odd_prime(r + s + t)
        return super(Triple, cls).__new__(cls, r, s, t)

    @classmethod
    def from_rs(cls, r, s, p):
        return cls(r, s, p - r - s)

    @property
    def p(self):
        return self.r + self.s + self.t

    def scaled(self, h):
        """Return the representative of h·(r,s,t) mod p, or None if its residues do not sum to p."""
        p = self.p
        a, b, c = (h * self.r) % p, (h * self.s) % p, (h * self.t) % p
        if 0 in (a, b, c) or a + b + c != p:
            return None
        return Triple(a, b, c)

    def reduced(self):
        """Return (h, Triple(r', 1, p - r' - 1)) with h·(r,s,t) ≡ (r', 1, p - r' - 1) mod p."""
        h = pow(self.s, -1, self.p)
        return h, self.scaled(h)

def triple_orbit(triple):
    """All triples birationally equivalent to triple through a scaling h."""
    orbit = []
    for h in range(1, triple.p):
        scaled = triple.scaled(h)
        if scaled is not None and scaled not in orbit:
            orbit.append(scaled)
    return orbit

def curve_genus(p):
    check_odd_prime(p)
    return (p - 1) // 2

def legendre(a, p):
    """Legendre symbol (a/p)."""
    check_odd_prime(p)
    return int(legendre_symbol(a % p, p))

def b_symbol(B, p):
    """(B/p) with the convention (0/p) = -1."""
    if B % p == 0:
        return -1
    return legendre(B, p)

SplittingData = namedtuple('SplittingData', ('ell', 'f', 'g', 'inert_in_K_over_F'))
"""Splitting of a rational prime ell in K = Q(ω).

Attributes:
 - ell (int): The rational prime.
 - f (int): Inertia degree, the order of ell mod p.
 - g (int): Number of places of K over ell.
 - inert_in_K_over_F (bool): Whether the places over ell are inert over the real subfield F.
"""

def splitting_data(ell, p):
    check_odd_prime(p)
    if ell == p or not isprime(ell):
        raise ValueError('%r is not a prime different from %d' % (ell, p))
    f = int(n_order(ell, p))
    return SplittingData(ell, f, (p - 1) // f, f % 2 == 0)

def is_inert(ell, p):
    """Whether ell generates a single prime of K."""
    return ell != p and int(n_order(ell, p)) == p - 1

DeltaDecomposition = namedtuple('DeltaDecomposition', ('delta', 'p', 'a', 'ord_b', 'u'))
"""Decomposition delta = e·p^a·(1-p)^b in Q_p^x / Q_p^xp.

Attributes:
 - a (int): ord_p(delta) mod p.
 - ord_b: ord_p(b) when a = 0 (possibly INFINITY), else None.
 - u (int): 0 if a != 0, else ord_b + 1.
"""

def fermat_quotient_order(x, p):
    """Return ord_p((x^(p-1) - 1)/p) for x prime to p."""
    if x in (1, -1):
        return INFINITY
    k = 3
    while True:
        modulus = p ** k
        m = pow(x % modulus, p - 1, modulus)
        if m != 1:
            return multiplicity(p, m - 1) - 1
        k *= 2

def u_of(x, p):
    """u invariant of an arbitrary nonzero integer x."""
    if x == 0:
        raise ValueError('u invariant of 0 is undefined')
    v = multiplicity(p, abs(x))
    a = v % p
    if a:
        return DeltaDecomposition(x, p, a, None, 0)
    ord_b = fermat_quotient_order(x // p ** v, p)
    return DeltaDecomposition(x, p, a, ord_b, ord_b + 1)

def u_invariant(delta, p):
    check_odd_prime(p)
    return u_of(reduce_delta(delta, p).delta, p)

def chi_conductor_exponent(delta, p):
    """Exponent of the prime over p in the conductor of the Kummer character of delta."""
    u = u_invariant(delta, p).u
    if u == 0:
        return p + 1
    if u == 1:
        return 2
    return 0

def x_value(triple, delta):
    """X = r^r s^s (t-p)^t delta^(r+s)."""
    r, s, t = triple
    return r ** r * s ** s * (t - triple.p) ** t * delta ** (r + s)

def d_value(triple, delta, p, prec=2):
    """The residue d of the root-number formula.

    Args:
        triple (Triple): Exponent triple with sum p.
        delta (int): Nonzero integer; it is canonicalized first.
        prec (int): Exponent of p used for the Fermat quotient (2 or more).
    """
    delta = reduce_delta(delta, p).delta
    decomposition = u_of(x_value(triple, delta), p)
    if decomposition.u == 0:
        d = ((triple.r + triple.s) * multiplicity(p, abs(delta))) % p
        if d == 0:
            raise ValueError('d vanishes for delta=%d; delta is not canonical' % delta)
        return d
    if decomposition.u == 1:
        modulus = p ** prec
        X = decomposition.delta
        return ((pow(X % modulus, p - 1, modulus) - 1) // p) % p
    raise ValueError('d is undefined when u(X) >= 2 (u=%s)' % decomposition.u)

def B_value(r, delta, p, prec=2):
    """The residue B controlling the local image at p for the triple (r, 1, p-r-1)."""
    check_odd_prime(p)
    if delta % p == 0:
        raise HypothesisError('B requires p not dividing delta (p=%d, delta=%d)' % (p, delta))
    if not 1 <= r <= p - 2:
        raise ValueError('r must lie in 1..p-2')
    modulus = p ** prec
    inner = r ** r * pow(delta, r + 1, modulus) * pow((r + 1) ** (r + 1), -1, modulus)
    w = pow(inner % modulus, p - 1, modulus)
    first = ((w - 1) // p) % p
    factor = 2 * r * delta * delta * pow((r + 1) ** 3, -1, p)
    return (first * factor) % p

_bernoulli = [Fraction(1)]

def bernoulli_number(n):
    """Exact Bernoulli number B_n (B_1 = -1/2)."""
    while len(_bernoulli) <= n:
        m = len(_bernoulli)
        total = sum(math.comb(m + 1, k) * _bernoulli[k] for k in range(m))
        _bernoulli.append(-total / (m + 1))
    return _bernoulli[n]

def bernoulli_mod_p(p):
    """Return {k: B_k mod p} for even 2 <= k <= p-3."""
    check_odd_prime(p)
    values = {}
    for k in range(2, p - 2, 2):
        b = bernoulli_number(k)
        values[k] = (b.numerator * pow(b.denominator, -1, p)) % p
    return values

Regularity = namedtuple('Regularity', ('p', 'i_p', 'regular', 'indices'))

def irregularity_index(p):
    """Count the even k <= p-3 with p | B_k."""
    indices = [k for k, b in sorted(bernoulli_mod_p(p).items()) if b == 0]
    return Regularity(p, len(indices), not indices, indices)

def is_regular(p):
    return irregularity_index(p).regular

ReducedDelta = namedtuple('ReducedDelta', ('delta', 'k_delta', 'factorization', 'all_inert'))

def reduce_delta(delta, p, factorization=None):
    """Canonical representative of delta in Q^x / Q^xp.

    Args:
        factorization (dict): Optional precomputed factorization of |delta|.
    """
    if delta == 0:
        raise ValueError('delta must be nonzero')
    if factorization is None:
        factorization = factorint(abs(delta))
    reduced = {}
    for ell, e in factorization.items():
        if e % p:
            reduced[int(ell)] = e % p
    value = 1
    for ell, e in reduced.items():
        value *= ell ** e
    if delta < 0:
        value = -value
    all_inert = all(is_inert(ell, p) for ell in reduced)
    return ReducedDelta(value, len(reduced), reduced, all_inert)

def row_reduce_mod_p(rows, ncols, p):
    """Reduced row echelon form of an integer matrix over F_p.

    Returns:
        (list of rows, pivot columns).
    """
    K = GF(p)
    if not rows:
        return [], ()
    matrix = DomainMatrix([[K(a % p) for a in row] for row in rows], (len(rows), ncols), K)
    reduced, pivots = matrix.rref()
    entries = [[int(x) % p for x in row] for row in reduced.to_Matrix().tolist()]
    return entries[:len(pivots)], tuple(pivots)

def rank_mod_p(rows, ncols, p):
    return len(row_reduce_mod_p(rows, ncols, p)[1])

def nullspace_mod_p(rows, ncols, p):
    """Basis of {x in F_p^ncols : rows·x = 0}."""
    reduced, pivots = row_reduce_mod_p(rows, ncols, p)
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for j in free:
        vector = [0] * ncols
        vector[j] = 1
        for row, pivot in zip(reduced, pivots):
            vector[pivot] = (-row[j]) % p
        basis.append(vector)
    return basis
