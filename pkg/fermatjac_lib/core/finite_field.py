"""Explicit finite fields F_q = F_ell[x]/(m(x)).

Elements are coefficient tuples (c_0, ..., c_{f-1}) over F_ell. The
field also knows the p-th power residue character and counts points on
the curves y^p = x^r (delta - x)^s.
"""
import logging
from collections import Counter
from functools import lru_cache
from math import gcd

from sympy import isprime, factorint
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_strip, gf_mul, gf_rem, gf_pow_mod, gf_gcdex, gf_sub, gf_gcd

from fermatjac_lib.core.errors import ConsistencyError
from fermatjac_lib.core.utils import log_message

# Largest field for which discrete-log tables are built.
chi_table_limit = 2 ** 20

def set_chi_table_limit(limit):
    global chi_table_limit
    chi_table_limit = int(limit)

class FqElt(object):
    """Element of an FqField."""
    __slots__ = ('field', 'coeffs')

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = tuple(coeffs)

    def __add__(self, other):
        return FqElt(self.field, self.field.add(self.coeffs, self.field.coerce(other)))

    def __sub__(self, other):
        return FqElt(self.field, self.field.sub(self.coeffs, self.field.coerce(other)))

    def __rsub__(self, other):
        return FqElt(self.field, self.field.sub(self.field.coerce(other), self.coeffs))

    def __mul__(self, other):
        return FqElt(self.field, self.field.mul(self.coeffs, self.field.coerce(other)))

    __radd__ = __add__
    __rmul__ = __mul__

    def __neg__(self):
        return FqElt(self.field, self.field.sub(self.field.zero, self.coeffs))

    def __pow__(self, n):
        if n < 0:
            return FqElt(self.field, self.field.pow(self.field.inverse(self.coeffs), -n))
        return FqElt(self.field, self.field.pow(self.coeffs, n))

    def __eq__(self, other):
        if isinstance(other, FqElt):
            return self.field is other.field and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == self.field.constant(other)
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.field.ell, self.field.f, self.coeffs))

    def is_zero(self):
        return not any(self.coeffs)

    def to_int(self):
        return self.field.encode(self.coeffs)

    def __repr__(self):
        return 'FqElt(%s, F_%d^%d)' % (list(self.coeffs), self.field.ell, self.field.f)

class FqField(object):
    """The finite field F_q, q = ell^f.

    Attributes:
     - ell (int): Characteristic.
     - f (int): Degree over F_ell.
     - modulus (tuple): Monic irreducible polynomial, coefficients from low to high degree.
     - generator (tuple): A generator of F_q^x.
    """
    def __init__(self, ell, f, modulus, generator=None):
        super(FqField, self).__init__()
        self.ell = ell
        self.f = f
        self.q = ell ** f
        self.modulus = tuple(modulus)
        self._gf_modulus = [ZZ(c) for c in reversed(self.modulus)]
        self.zero = (0,) * f
        self.one = self.constant(1)
        self.generator = generator
        self._exp = None
        self._log = None

    def __repr__(self):
        return 'FqField(%d, %d)' % (self.ell, self.f)

    def coerce(self, value):
        if isinstance(value, FqElt):
            return value.coeffs
        if isinstance(value, int):
            return self.constant(value)
        return tuple(value)

    def constant(self, c):
        return ((c % self.ell),) + (0,) * (self.f - 1)

    def element(self, value):
        """Wrap an integer constant or coefficient sequence as an FqElt."""
        return FqElt(self, self.coerce(value))

    def encode(self, a):
        n = 0
        for c in reversed(a):
            n = n * self.ell + c
        return n

    def decode(self, n):
        coeffs = []
        for _ in range(self.f):
            n, c = divmod(n, self.ell)
            coeffs.append(c)
        return tuple(coeffs)

    def elements(self):
        for n in range(self.q):
            yield self.decode(n)

    def add(self, a, b):
        return tuple((x + y) % self.ell for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple((x - y) % self.ell for x, y in zip(a, b))

    def to_poly(self, a):
        """Dense F_ell polynomial, highest degree first, as galoistools expects."""
        return gf_strip([ZZ(c) for c in reversed(a)])

    def from_poly(self, g):
        coeffs = [int(c) for c in reversed(g)]
        return tuple(coeffs + [0] * (self.f - len(coeffs)))

    def mul(self, a, b):
        if self.f == 1:
            return ((a[0] * b[0]) % self.ell,)
        product = gf_mul(self.to_poly(a), self.to_poly(b), self.ell, ZZ)
        return self.from_poly(gf_rem(product, self._gf_modulus, self.ell, ZZ))

    def pow(self, a, n):
        if self.f == 1:
            return (pow(a[0], n, self.ell),)
        return self.from_poly(gf_pow_mod(self.to_poly(a), n, self._gf_modulus, self.ell, ZZ))

    def inverse(self, a):
        if not any(a):
            raise ZeroDivisionError('Zero has no inverse in F_%d' % self.q)
        inv, _, _ = gf_gcdex(self.to_poly(a), self._gf_modulus, self.ell, ZZ)
        return self.from_poly(inv)

    def zeta(self, p):
        """The fixed primitive p-th root of unity generator^((q-1)/p)."""
        if (self.q - 1) % p:
            raise ValueError('%d does not divide q - 1 = %d' % (p, self.q - 1))
        return self.pow(self.generator, (self.q - 1) // p)

    def has_tables(self):
        return self.q <= chi_table_limit

    def tables_built(self):
        return self._log is not None

    def build_tables(self):
        if self._log is not None:
            return
        log_message('finite_field', 'Building log tables for F_%d^%d' % (self.ell, self.f), logging.DEBUG)
        exp = [0] * (self.q - 1)
        log = [None] * self.q
        current = self.one
        for k in range(self.q - 1):
            code = self.encode(current)
            exp[k] = code
            log[code] = k
            current = self.mul(current, self.generator)
        self._exp, self._log = exp, log

    def log(self, a):
        """Discrete logarithm of a nonzero element with respect to the generator."""
        self.build_tables()
        k = self._log[self.encode(a)]
        if k is None:
            raise ValueError('Zero has no discrete logarithm')
        return k

def _is_irreducible(modulus, ell):
    """Rabin's test via Frobenius: x^(ell^f) = x and gcd(x^(ell^(f/d)) - x, m) = 1."""
    f = len(modulus) - 1
    m = [ZZ(c) for c in reversed(modulus)]
    x = [ZZ(1), ZZ(0)]
    h = gf_pow_mod(x, ell ** f, m, ell, ZZ)
    if gf_rem(gf_sub(h, x, ell, ZZ), m, ell, ZZ):
        return False
    for d in factorint(f):
        hd = gf_pow_mod(x, ell ** (f // d), m, ell, ZZ)
        if gf_gcd(gf_sub(hd, x, ell, ZZ), m, ell, ZZ) != [ZZ(1)]:
            return False
    return True

def _is_generator(field, a, prime_divisors):
    for d in prime_divisors:
        if field.pow(a, (field.q - 1) // d) == field.one:
            return False
    return True

@lru_cache(maxsize=None)
def build_field(ell, f):
    """Construct F_{ell^f} deterministically.

    The modulus is the irreducible monic polynomial whose lower
    coefficients have the smallest base-ell encoding; the generator is
    the element with the smallest encoding.
    """
    if not isprime(ell) or f < 1:
        raise ValueError('Invalid field parameters (%r, %r)' % (ell, f))
    modulus = None
    for n in range(ell ** f):
        digits = []
        for _ in range(f):
            n, c = divmod(n, ell)
            digits.append(c)
        candidate = tuple(digits) + (1,)
        if _is_irreducible(candidate, ell):
            modulus = candidate
            break
    if modulus is None:
        raise ConsistencyError('No irreducible polynomial of degree %d over F_%d' % (f, ell))
    field = FqField(ell, f, modulus)
    prime_divisors = list(factorint(field.q - 1))
    for n in range(1, field.q):
        # Constants lie in F_ell and cannot generate a larger field.
        if f > 1 and n < ell:
            continue
        a = field.decode(n)
        if _is_generator(field, a, prime_divisors):
            field.generator = a
            break
    return field

def chi_exponent(field, c, p):
    """The k in Z/p with c^((q-1)/p) = zeta_p^k."""
    c = field.coerce(c)
    if (field.q - 1) % p:
        raise ValueError('%d does not divide q - 1 = %d' % (p, field.q - 1))
    if not any(c):
        raise ValueError('chi is undefined at 0')
    if field.tables_built():
        return field.log(c) % p
    w = field.pow(c, (field.q - 1) // p)
    zeta = field.zeta(p)
    power = field.one
    for k in range(p):
        if power == w:
            return k
        power = field.mul(power, zeta)
    raise ConsistencyError('c^((q-1)/p) is not a p-th root of unity')

def _check_good_prime(field, p, delta):
    if field.ell == p or delta % field.ell == 0:
        raise ValueError('ell=%d divides p*delta' % field.ell)

def count_affine_points(field, triple, delta):
    """Number of (x, y) in F_q^2 with y^p = x^r (delta - x)^s."""
    p, r, s = triple.p, triple.r, triple.s
    _check_good_prime(field, p, delta)
    d = field.constant(delta)
    if (field.q - 1) % p == 0:
        # x = 0 and x = delta each give the single point y = 0.
        count = 2
        for x in field.elements():
            y = field.sub(d, x)
            if not any(x) or not any(y):
                continue
            if field.has_tables():
                k = (r * field.log(x) + s * field.log(y)) % p
            else:
                k = chi_exponent(field, field.mul(field.pow(x, r), field.pow(y, s)), p)
            if k == 0:
                count += p
        return count
    fibres = Counter(field.encode(field.pow(y, p)) for y in field.elements())
    count = 0
    for x in field.elements():
        v = field.mul(field.pow(x, r), field.pow(field.sub(d, x), s))
        count += fibres[field.encode(v)]
    return count

def places_over_branch_points(triple):
    """Places of the smooth model over x = 0, x = delta and x = infinity."""
    p = triple.p
    return gcd(p, triple.r) + gcd(p, triple.s) + gcd(p, triple.r + triple.s)

def zeta_numerator(ell, triple, delta):
    """P_ell(T) of the smooth projective model, as coefficients from T^0 up.

    Point counts over F_{ell^m}, m = 1..p-1, are converted to power sums of
    the Frobenius eigenvalues and then to coefficients by Newton's identities.
    """
    p = triple.p
    degree = p - 1
    genus = degree // 2
    power_sums = [0]
    for m in range(1, degree + 1):
        field = build_field(ell, m)
        affine = count_affine_points(field, triple, delta)
        # The affine count has one point over each of x = 0 and x = delta.
        projective = affine - 2 + places_over_branch_points(triple)
        power_sums.append(field.q + 1 - projective)
    coeffs = [1]
    for k in range(1, degree + 1):
        total = sum(power_sums[j] * coeffs[k - j] for j in range(1, k + 1))
        if total % k:
            raise ConsistencyError('Newton identity is not integral at k=%d' % k,
                                   {'ell': ell, 'triple': tuple(triple), 'delta': delta})
        coeffs.append(-total // k)
    sign = coeffs[degree] // ell ** genus
    for k in range(degree + 1):
        if coeffs[degree - k] * ell ** k != sign * ell ** genus * coeffs[k] or sign not in (1, -1):
            raise ConsistencyError('Zeta numerator fails the functional equation',
                                   {'ell': ell, 'coefficients': coeffs})
    return coeffs
