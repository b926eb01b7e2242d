"""Truncated arithmetic in K_Π = Q_p(λ), λ^(p-1) = -p.

An element is sum(c_j λ^j, j < p-1) with c_j in Z/p^M. The ring O/p^M O
equals O/λ^(M(p-1)) O, so every element also carries an absolute
λ-adic precision ``prec``, lowered when dividing by powers of λ.
"""
import math
from collections import namedtuple
from functools import lru_cache

from flint import fmpz_poly
from sympy import multiplicity

from fermatjac_lib.core.errors import LocalPrecisionError

DEFAULT_PRECISION = 4

def teichmuller(a, p, M):
    """Teichmüller lift of a mod p in Z/p^M."""
    modulus = p ** M
    x = a % modulus
    while True:
        y = pow(x, p, modulus)
        if y == x:
            return x
        x = y

@lru_cache(maxsize=None)
def eisenstein_modulus(p):
    """λ^(p-1) + p as an integer polynomial."""
    return fmpz_poly([p] + [0] * (p - 2) + [1])

class LocalElt(object):
    """Truncated element of the ring of integers of K_Π."""
    __slots__ = ('p', 'M', 'coeffs', 'prec')

    def __init__(self, coeffs, p, M, prec=None):
        modulus = p ** M
        coeffs = [c % modulus for c in coeffs]
        if len(coeffs) != p - 1:
            raise ValueError('Expected %d coefficients' % (p - 1))
        self.p = p
        self.M = M
        self.coeffs = tuple(coeffs)
        self.prec = M * (p - 1) if prec is None else min(prec, M * (p - 1))

    @classmethod
    def constant(cls, c, p, M):
        return cls([c] + [0] * (p - 2), p, M)

    @classmethod
    def monomial(cls, e, p, M, c=1):
        """c·λ^e, using λ^(p-1) = -p."""
        n = p - 1
        coeffs = [0] * n
        if e // n < M:
            coeffs[e % n] = c * (-p) ** (e // n)
        return cls(coeffs, p, M)

    @property
    def modulus(self):
        return self.p ** self.M

    def _coerce(self, other):
        if isinstance(other, int):
            return LocalElt.constant(other, self.p, self.M)
        if (other.p, other.M) != (self.p, self.M):
            raise ValueError('Mismatched local rings')
        return other

    def __add__(self, other):
        other = self._coerce(other)
        return LocalElt([a + b for a, b in zip(self.coeffs, other.coeffs)],
                        self.p, self.M, min(self.prec, other.prec))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return LocalElt([a - b for a, b in zip(self.coeffs, other.coeffs)],
                        self.p, self.M, min(self.prec, other.prec))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return LocalElt([-a for a in self.coeffs], self.p, self.M, self.prec)

    def __mul__(self, other):
        other = self._coerce(other)
        product = fmpz_poly(list(self.coeffs)) * fmpz_poly(list(other.coeffs))
        coeffs = [int(c) for c in (product % eisenstein_modulus(self.p)).coeffs()]
        coeffs.extend([0] * (self.p - 1 - len(coeffs)))
        return LocalElt(coeffs, self.p, self.M, min(self.prec, other.prec))

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        result = LocalElt.constant(1, self.p, self.M)
        result.prec = self.prec
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = LocalElt.constant(other, self.p, self.M)
        if not isinstance(other, LocalElt):
            return NotImplemented
        return (self - other).is_zero()

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    def __repr__(self):
        return 'LocalElt(%s; p=%d, prec=%d)' % (list(self.coeffs), self.p, self.prec)

    def ord_lambda(self):
        """λ-adic valuation, capped at the precision."""
        n = self.p - 1
        best = self.prec
        for j, c in enumerate(self.coeffs):
            if c:
                best = min(best, j + n * multiplicity(self.p, c))
        return best

    def is_zero(self):
        return self.ord_lambda() >= self.prec

    def residue(self):
        return self.coeffs[0] % self.p

    def digit(self, i):
        """The residue a with self ≡ a·λ^i mod λ^(i+1), assuming ord >= i."""
        n = self.p - 1
        v = i // n
        c = self.coeffs[i % n]
        return ((c // self.p ** v) * (-1) ** v) % self.p

    def shift(self, k):
        """self / λ^k, for ord_lambda(self) >= k."""
        if k == 0:
            return self
        n = self.p - 1
        a = -(-k // n)
        z = self * LocalElt.monomial(a * n - k, self.p, self.M)
        divisor = self.p ** a
        if any(c % divisor for c in z.coeffs):
            raise ValueError('Element is not divisible by λ^%d' % k)
        coeffs = [(c // divisor) * (-1) ** a for c in z.coeffs]
        return LocalElt(coeffs, self.p, self.M, min(self.prec - k, (self.M - a) * n))

    def inverse(self):
        """Inverse of a unit by Newton iteration."""
        if self.residue() == 0:
            raise ZeroDivisionError('Only units are invertible in O')
        y = LocalElt.constant(pow(self.coeffs[0], -1, self.modulus), self.p, self.M)
        correct = 1
        while correct < self.prec:
            y = y * (2 - self * y)
            correct *= 2
        y.prec = self.prec
        return y

UnitClass = namedtuple('UnitClass', ('p', 'exponents'))
"""Coordinates (c_0, ..., c_p) in F_p of an element of K_Π^x / (K_Π^x)^p."""

class LocalField(object):
    """Tables for K_Π at coefficient precision M.

    Attributes:
     - omega_hat (LocalElt): The chosen root of Φ_p.
     - generators (list): u_0 = λ, u_1 = ω̂, u_i = exp(λ^i) for 2 <= i <= p.
    """
    def __init__(self, p, M, branch=1):
        super(LocalField, self).__init__()
        if M * (p - 1) < p + 2:
            raise LocalPrecisionError('Precision M=%d is too small for p=%d' % (M, p))
        self.p = p
        self.M = M
        self.branch = branch
        self.teich = [0] + [teichmuller(a, p, M) for a in range(1, p)]
        self.omega_hat = self._find_omega()
        self.generators = [self.generator(i) for i in range(p + 1)]
        self.inverse_generators = [None] + [u.inverse() for u in self.generators[1:]]
        self.leading_digits = [None] + [(u - 1).digit(i) for i, u in enumerate(self.generators) if i]

    def lam(self):
        return LocalElt.monomial(1, self.p, self.M)

    def _find_omega(self):
        """Solve Φ_p(1 + λz)/p = 0 by Newton from z ≡ branch.

        Φ_p(1 + λz)/p = -z^(p-1) + sum_k C(p, k+1)/p·λ^k z^k, whose reduction
        1 - z^(p-1) has simple roots, so the lift is unique.
        """
        p, M = self.p, self.M
        lam = self.lam()
        coeffs = [LocalElt.constant(math.comb(p, k + 1) // p, p, M) * lam ** k for k in range(p - 1)]
        coeffs.append(LocalElt.constant(-1, p, M))

        def evaluate(z, polynomial):
            total = LocalElt.constant(0, p, M)
            for c in reversed(polynomial):
                total = total * z + c
            return total

        derivative = [coeffs[k] * k for k in range(1, p)]
        z = LocalElt.constant(self.branch, p, M)
        for _ in range(2 * M * p):
            step = evaluate(z, coeffs) * evaluate(z, derivative).inverse()
            if step.is_zero():
                break
            z = z - step
        else:
            raise LocalPrecisionError('Newton iteration for ω̂ did not converge (p=%d)' % p)
        omega = lam * z + 1
        if not (omega ** p - 1).is_zero():
            raise LocalPrecisionError('ω̂^p != 1 at precision M=%d' % M)
        return omega

    def generator(self, i):
        p, M = self.p, self.M
        if not 0 <= i <= p:
            raise ValueError('Generator index must lie in 0..%d' % p)
        if i == 0:
            return self.lam()
        if i == 1:
            return self.omega_hat
        N = M * (p - 1)
        total = LocalElt.constant(0, p, M)
        k = 0
        while (i - 1) * k + 1 < N or k == 0:
            fact = math.factorial(k)
            v = multiplicity(p, fact) if k >= p else 0
            unit = fact // p ** v
            e = i * k - (p - 1) * v
            total = total + LocalElt.monomial(e, p, M, (-1) ** v * pow(unit, -1, p ** M))
            k += 1
        return total

    def galois(self, h, x):
        mu = self.teich[h % self.p]
        return LocalElt([c * pow(mu, j, x.modulus) for j, c in enumerate(x.coeffs)], x.p, x.M, x.prec)

    def embed(self, x):
        total = LocalElt.constant(0, self.p, self.M)
        for c in reversed(x.coeffs):
            total = total * self.omega_hat + c
        if total.is_zero():
            raise LocalPrecisionError('Embedding of %r is zero to precision' % (x,))
        return total

    def one_unit_part(self, x):
        """Return (ord_lambda(x), y) with x = λ^ord · τ · y, τ Teichmüller and y ≡ 1 mod λ."""
        k = x.ord_lambda()
        if k >= x.prec:
            raise ValueError('Element is zero to working precision')
        u = x.shift(k)
        return k, u * pow(self.teich[u.residue()], -1, x.modulus)

    def is_pth_power(self, x):
        # (1 + λO)^p = 1 + λ^(p+1)O, and Teichmüller units are p-th powers.
        k, y = self.one_unit_part(x)
        if k % self.p:
            return False
        if y.prec < self.p + 1:
            raise LocalPrecisionError('Insufficient precision for a p-th power test')
        return (y - 1).ord_lambda() >= self.p + 1

    def unit_class(self, x):
        """Coordinates of x in K_Π^x/(K_Π^x)^p with respect to u_0, ..., u_p.

        The 1-unit part is walked down the filtration U^i/U^(i+1),
        i = 1..p, each level being spanned by u_i. Below level p+1 every
        1-unit is a p-th power.
        """
        p = self.p
        k, y = self.one_unit_part(x)
        if y.prec < p + 1:
            raise LocalPrecisionError('Insufficient precision for unit_class')
        exponents = [k % p] + [0] * p
        for i in range(1, p + 1):
            a = (y - 1).digit(i)
            if a:
                c = (a * pow(self.leading_digits[i], -1, p)) % p
                exponents[i] = c
                y = y * self.inverse_generators[i] ** c
        if (y - 1).ord_lambda() < p + 1:
            raise LocalPrecisionError('Unit filtration walk did not terminate')
        return UnitClass(p, tuple(exponents))

@lru_cache(maxsize=None)
def get_local_field(p, M=DEFAULT_PRECISION, branch=1):
    return LocalField(p, M, branch)

def embed_omega(p, M=DEFAULT_PRECISION, branch=1):
    return get_local_field(p, M, branch).omega_hat

def galois_local(h, x):
    if h % x.p == 0:
        raise ValueError('h must be prime to p')
    return get_local_field(x.p, x.M).galois(h, x)

def generator_u(i, p, M=DEFAULT_PRECISION):
    return get_local_field(p, M).generators[i]

def is_pth_power(x):
    return get_local_field(x.p, x.M).is_pth_power(x)

def unit_class(x, branch=1):
    return get_local_field(x.p, x.M, branch).unit_class(x)

def embed_cyclotomic(x, M=DEFAULT_PRECISION, branch=1):
    return get_local_field(x.p, M, branch).embed(x)
