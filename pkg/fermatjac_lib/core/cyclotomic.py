"""Exact arithmetic in Z[ω], ω a primitive p-th root of unity.

Jacobi sums, CM types, the Stickelberger check, the Hecke character
values at rational primes and the cyclotomic units E_i.
"""
from collections import namedtuple
from functools import lru_cache

from sympy import primitive_root
from sympy.ntheory import n_order

from fermatjac_lib.core import arith, finite_field
from fermatjac_lib.core.errors import ConsistencyError
from fermatjac_lib.core.finite_field import build_field, chi_exponent

class CycInt(object):
    """Element of Z[ω] in the basis 1, ω, ..., ω^(p-2)."""
    __slots__ = ('p', 'coeffs')

    def __init__(self, coeffs, p):
        coeffs = tuple(coeffs)
        if len(coeffs) != p - 1:
            raise ValueError('Expected %d coefficients, got %d' % (p - 1, len(coeffs)))
        self.p = p
        self.coeffs = coeffs

    @classmethod
    def from_powers(cls, values, p):
        """Build sum(values[k] * ω^k) for a sequence of length p."""
        values = list(values)
        top = values[p - 1]
        return cls([v - top for v in values[:p - 1]], p)

    @classmethod
    def constant(cls, c, p):
        return cls([c] + [0] * (p - 2), p)

    @classmethod
    def omega_power(cls, k, p):
        values = [0] * p
        values[k % p] = 1
        return cls.from_powers(values, p)

    def _coerce(self, other):
        if isinstance(other, int):
            return CycInt.constant(other, self.p)
        if other.p != self.p:
            raise ValueError('Mismatched primes %d and %d' % (self.p, other.p))
        return other

    def __add__(self, other):
        other = self._coerce(other)
        return CycInt([a + b for a, b in zip(self.coeffs, other.coeffs)], self.p)

    def __sub__(self, other):
        other = self._coerce(other)
        return CycInt([a - b for a, b in zip(self.coeffs, other.coeffs)], self.p)

    __radd__ = __add__

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return CycInt([-a for a in self.coeffs], self.p)

    def __mul__(self, other):
        other = self._coerce(other)
        p = self.p
        values = [0] * p
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        values[(i + j) % p] += a * b
        return CycInt.from_powers(values, p)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result = CycInt.constant(1, self.p)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = CycInt.constant(other, self.p)
        if not isinstance(other, CycInt):
            return NotImplemented
        return self.p == other.p and self.coeffs == other.coeffs

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def __repr__(self):
        terms = ['%d*w^%d' % (c, k) if k else str(c) for k, c in enumerate(self.coeffs) if c]
        return 'CycInt(%s; p=%d)' % (' + '.join(terms) or '0', self.p)

    def is_rational(self):
        return not any(self.coeffs[1:])

    def galois_apply(self, h):
        if h % self.p == 0:
            raise ValueError('h must be prime to p')
        values = [0] * self.p
        for k, c in enumerate(self.coeffs):
            values[(h * k) % self.p] += c
        return CycInt.from_powers(values, self.p)

    def conj(self):
        return self.galois_apply(self.p - 1)

    def norm(self):
        result = CycInt.constant(1, self.p)
        for h in range(1, self.p):
            result = result * self.galois_apply(h)
        if not result.is_rational():
            raise ConsistencyError('Norm is not rational: %r' % result)
        return result.coeffs[0]

    def trace(self):
        """Tr_{K/Q}: Tr(1) = p - 1 and Tr(ω^k) = -1 for k = 1..p-2."""
        return (self.p - 1) * self.coeffs[0] - sum(self.coeffs[1:])

    def inverse(self):
        """Inverse of a unit of Z[ω]."""
        n = self.norm()
        if n not in (1, -1):
            raise ValueError('%r is not a unit (norm %d)' % (self, n))
        result = CycInt.constant(n, self.p)
        for h in range(2, self.p):
            result = result * self.galois_apply(h)
        return result

    def evaluate(self, m, ell):
        """Image under ω -> m in F_ell, where m has order p mod ell."""
        total = 0
        for c in reversed(self.coeffs):
            total = (total * m + c) % ell
        return total

    def evaluate_in(self, field, zeta):
        """Image in the finite field under ω -> zeta."""
        total = field.zero
        for c in reversed(self.coeffs):
            total = field.add(field.mul(total, zeta), field.constant(c))
        return total

def galois_apply(h, x):
    return x.galois_apply(h)

CMType = namedtuple('CMType', ('p', 'elements'))

def cm_type(triple):
    """The h in (Z/p)^x with <hr/p> + <hs/p> + <ht/p> = 1."""
    p = triple.p
    elements = frozenset(h for h in range(1, p)
                         if (h * triple.r) % p + (h * triple.s) % p + (h * triple.t) % p == p)
    return CMType(p, elements)

def jacobi_sum(field, triple, p=None):
    """j = -sum_{x != 0, 1} χ(x)^r χ(1 - x)^s, with χ(x) = ω^chi_exponent(x)."""
    if p is None:
        p = triple.p
    if (field.q - 1) % p:
        raise ValueError('p=%d does not divide q-1=%d' % (p, field.q - 1))
    r, s = triple.r, triple.s
    counts = [0] * p
    for x in field.elements():
        y = field.sub(field.one, x)
        if not any(x) or not any(y):
            continue
        if field.has_tables():
            e = (r * field.log(x) + s * field.log(y)) % p
        else:
            e = (r * chi_exponent(field, x, p) + s * chi_exponent(field, y, p)) % p
        counts[e] += 1
    return -CycInt.from_powers(counts, p)

def jacobi_congruence(j, p):
    """Whether j ≡ 1 mod (1 - ω)^2."""
    total = sum(j.coeffs)
    weighted = sum(i * c for i, c in enumerate(j.coeffs))
    return total % p == 1 % p and weighted % p == 0

def character_sum_count(field, triple, delta):
    """Affine point count predicted by the Jacobi sum.

    Substituting x = delta·u gives
    #{y^p = x^r (delta - x)^s} = q - Tr(ω^(c(r+s)) j), c = chi_exponent(delta).
    """
    p = triple.p
    c = chi_exponent(field, field.constant(delta), p)
    j = jacobi_sum(field, triple, p)
    return field.q - (CycInt.omega_power(c * (triple.r + triple.s), p) * j).trace()

def stickelberger_vanishing_set(triple, ell, relabel=1):
    """The k in (Z/p)^x for which j lies in the place (ell, ω - zeta^k).

    Args:
        relabel (int): Use zeta^relabel as the base root of unity.
    """
    p = triple.p
    if ell % p != 1:
        raise ValueError('Stickelberger check needs ell ≡ 1 mod p (ell=%d, p=%d)' % (ell, p))
    field = build_field(ell, 1)
    zeta = field.pow(field.zeta(p), relabel)[0]
    # Characters labelled by zeta^relabel are the originals composed with σ_relabel^-1.
    j = jacobi_sum(field, triple, p).galois_apply(pow(relabel, -1, p))
    return frozenset(k for k in range(1, p) if j.evaluate(pow(zeta, k, ell), ell) == 0)

def stickelberger_check(triple, ell, relabel=1):
    return stickelberger_vanishing_set(triple, ell, relabel) == cm_type(triple).elements

def phi_ell_paths(triple, ell, p=None):
    """Both computations of φ_ell: (legendre(ell, p), product over places)."""
    if p is None:
        p = triple.p
    data = arith.splitting_data(ell, p)
    formula = arith.legendre(ell, p)
    if not data.inert_in_K_over_F:
        # Conjugate places pair off with product +1.
        return formula, 1
    place_value = -1
    field_size = ell ** data.f
    if field_size <= finite_field.chi_table_limit:
        j = jacobi_sum(build_field(ell, data.f), triple, p)
        q_v = ell ** (data.f // 2)
        if j == -q_v:
            place_value = -1
        elif j == q_v:
            place_value = 1
        else:
            raise ConsistencyError('Jacobi sum at a place inert over F is not ±q_v',
                                   {'ell': ell, 'p': p, 'j': repr(j)})
    return formula, place_value ** data.g

def phi_ell(triple, ell, p=None):
    formula, places = phi_ell_paths(triple, ell, p)
    if formula != places:
        raise ConsistencyError('phi_ell paths disagree', {'ell': ell, 'formula': formula, 'places': places})
    return formula

@lru_cache(maxsize=None)
def cyclotomic_unit_E(i, p, g=None):
    """E_i = prod_a (ω^((1-g)/2) (1 - ω^g)/(1 - ω))^(a^i σ_a^-1)."""
    if g is None:
        g = int(primitive_root(p))
    if i % 2 or not 2 <= i <= p - 3:
        raise ValueError('E_i needs even i in 2..p-3 (i=%d, p=%d)' % (i, p))
    if int(n_order(g, p)) != p - 1:
        raise ValueError('%d is not a primitive root mod %d' % (g, p))
    g = g % p
    half = ((1 - g) * pow(2, -1, p)) % p
    geometric = CycInt.from_powers([1] * g + [0] * (p - g), p)
    xi = CycInt.omega_power(half, p) * geometric
    result = CycInt.constant(1, p)
    for a in range(1, p):
        result = result * xi.galois_apply(pow(a, -1, p)) ** pow(a, i, p)
    return result
