"""Local Kummer images and the Π-Selmer group of J_{r,1,p-r-1;δ} over K.

Two independent routes are provided: the closed form in terms of B and
the prime factors of δ, and a direct kernel computation over the S-units
{p, ℓ | δ, ω, E_2, ..., E_{p-3}} using local classes at every place over pδ.
"""
import logging
from collections import namedtuple

from sympy import multiplicity

from fermatjac_lib.core import arith
from fermatjac_lib.core.cyclotomic import CycInt, cyclotomic_unit_E
from fermatjac_lib.core.errors import HypothesisError, ConsistencyError, LocalPrecisionError
from fermatjac_lib.core.finite_field import build_field, chi_exponent
from fermatjac_lib.core.local_field import DEFAULT_PRECISION, get_local_field
from fermatjac_lib.core.utils import log_message

PI = 'Pi'

LocalImage = namedtuple('LocalImage', ('place', 'kind', 'indices', 'dimension'))
"""Image of the local Kummer map.

Attributes:
 - place: PI or a rational prime ell.
 - kind (str): 'u-span' at PI, 'unramified' or 'delta' away from p.
 - indices (frozenset): u-indices spanning the image at PI.
 - dimension (int): Dimension over F_p.
"""

class SelmerReport(namedtuple('SelmerReport', ('p', 'r', 'delta', 'B', 'b', 'generators',
                                               'dimension', 'S', 'method', 'hypotheses', 'basis'))):
    """Selmer group data for the triple (r, 1, p-r-1) and canonical delta."""
    __slots__ = ()

    def to_dict(self):
        d = self._asdict()
        d['generators'] = list(self.generators)
        d['hypotheses'] = dict(self.hypotheses)
        d['basis'] = [dict(v) for v in self.basis] if self.basis is not None else None
        return d

    @classmethod
    def from_dict(cls, d):
        d = dict(d)
        d['generators'] = list(d['generators'])
        return cls(**d)

def hypotheses(r, delta, p):
    """Record of the hypotheses of the Selmer theorem."""
    reduced = arith.reduce_delta(delta, p)
    return {
        'p_at_least_5': p >= 5,
        'p_regular': arith.is_regular(p),
        'p_coprime_delta': reduced.delta % p != 0,
        'all_inert': reduced.all_inert,
        'r_in_range': 1 <= r <= p - 2,
    }

def check_hypotheses(r, delta, p, skip=()):
    record = hypotheses(r, delta, p)
    failed = [k for k, v in sorted(record.items()) if not v and k not in skip]
    if failed:
        raise HypothesisError('Hypotheses not met for (p=%d, r=%d, delta=%d): %s'
                              % (p, r, delta, ', '.join(failed)), record)
    return record

def local_image_off_p(ell, delta, p):
    arith.splitting_data(ell, p)
    if delta % ell == 0:
        return LocalImage(ell, 'delta', None, 1)
    return LocalImage(ell, 'unramified', None, 1)

def local_image_at_p(r, delta, p):
    arith.check_odd_prime(p)
    if p == 3:
        raise HypothesisError('The local image at p is described for p >= 5 only')
    B = arith.B_value(r, delta, p)
    indices = set(range((p + 3) // 2, p + 1))
    if B % p and arith.legendre(B, p) == 1:
        indices.add((p - 1) // 2)
    else:
        indices.add((p + 1) // 2)
    return LocalImage(PI, 'u-span', frozenset(indices), len(indices))

def _closed_form_generators(r, delta, p, B):
    reduced = arith.reduce_delta(delta, p)
    labels = [str(ell) for ell in sorted(reduced.factorization)]
    b = arith.b_symbol(B, p)
    indices = [i for i in range((p + 3) // 2, p - 2) if i % 2 == 0]
    if p % 4 == 1 and b == 1:
        indices.insert(0, (p - 1) // 2)
    elif p % 4 == 3 and b == -1:
        indices.insert(0, (p + 1) // 2)
    labels.extend('E_%d' % i for i in indices)
    return labels

def closed_form_dimension(k, b, p):
    if p % 4 == 1:
        return k + (p - 3 + 2 * b) // 4
    return k + (p - 5 - 2 * b) // 4

def selmer_closed_form(r, delta, p, skip=()):
    """Selmer group from the closed form.

    Args:
        skip (tuple): Hypothesis names not to enforce; used by the
            Vandiver-conditional bound for irregular p.
    """
    arith.check_odd_prime(p)
    record = check_hypotheses(r, delta, p, skip)
    reduced = arith.reduce_delta(delta, p)
    B = arith.B_value(r, reduced.delta, p)
    b = arith.b_symbol(B, p)
    generators = _closed_form_generators(r, reduced.delta, p, B)
    dimension = closed_form_dimension(reduced.k_delta, b, p)
    if dimension != len(generators):
        raise ConsistencyError('Closed-form generator count %d differs from dimension %d'
                               % (len(generators), dimension))
    return SelmerReport(p, r, reduced.delta, B, b, generators, dimension, dimension - 1,
                        'closed_form', record, None)

def selmer_rank_S(r, delta, p):
    return selmer_closed_form(r, delta, p).S

def torsion_summary(delta, p):
    """Π-primary torsion of J(K): J[Π] unless delta is a p-th power.

    In both cases the Π-primary part is cyclic over O_K, so it
    contributes exactly 1 to dim Sel.
    """
    reduced = arith.reduce_delta(delta, p)
    return {'delta_is_pth_power': reduced.k_delta == 0, 'quotient_dimension': 1}

def _ideal_count(reduced, p, assume_principal):
    if reduced.all_inert:
        return reduced.k_delta
    if not assume_principal:
        raise HypothesisError('Prime ideals over delta are principal only checked for inert factors')
    return sum(arith.splitting_data(ell, p).g for ell in reduced.factorization)

def selmer_upper_bound(delta, p, dim_Cl=None, assume_principal=False):
    """Upper bound for dim Sel from the units that survive the condition at Π.

    k(δ) + (p-3)/2 - #{even 2 <= i <= (p-3)/2 : p does not divide B_i} + dim Cl(K)[p]
    """
    arith.check_odd_prime(p)
    if p < 5:
        raise HypothesisError('The bound is stated for p >= 5')
    reduced = arith.reduce_delta(delta, p)
    if reduced.delta % p == 0:
        raise HypothesisError('p divides delta')
    regularity = arith.irregularity_index(p)
    if dim_Cl is None:
        if not regularity.regular:
            raise HypothesisError('p=%d is irregular; dim Cl(K)[p] must be supplied' % p)
        dim_Cl = 0
    k = _ideal_count(reduced, p, assume_principal)
    bernoulli = arith.bernoulli_mod_p(p)
    excluded = sum(1 for i, value in bernoulli.items() if i <= (p - 3) // 2 and value)
    return k + (p - 3) // 2 - excluded + dim_Cl

def selmer_vandiver_bound(r, delta, p, dim_Cl):
    """dim Sel <= closed-form dimension + dim Cl(K)[p], assuming Vandiver's conjecture."""
    report = selmer_closed_form(r, delta, p, skip=('p_regular',))
    return report.dimension + dim_Cl

def selmer_class_bound(delta, p, dim_Cl, assume_principal=False):
    """k(δ) + ⌈(p-3)/4⌉ + 2·dim Cl(K)[p]."""
    reduced = arith.reduce_delta(delta, p)
    k = _ideal_count(reduced, p, assume_principal)
    return k + -(-(p - 3) // 4) + 2 * dim_Cl

def local_class_at_pi(x, p, M=DEFAULT_PRECISION, branch=1):
    """unit_class of an element of Z[ω] at Π, retried once at higher precision."""
    try:
        local = get_local_field(p, M, branch)
        return local.unit_class(local.embed(x)).exponents
    except LocalPrecisionError:
        log_message('selmer', 'Raising local precision to %d for %r' % (M + 1, x), logging.WARNING)
        local = get_local_field(p, M + 1, branch)
        return local.unit_class(local.embed(x)).exponents

def s_unit_generators(delta, p):
    """Labels and elements of the basis {p, ℓ | δ, ω, E_2, ..., E_{p-3}} of R^x/R^xp."""
    reduced = arith.reduce_delta(delta, p)
    labels = [str(p)] + [str(ell) for ell in sorted(reduced.factorization)] + ['omega']
    elements = [CycInt.constant(p, p)] + [CycInt.constant(ell, p) for ell in sorted(reduced.factorization)]
    elements.append(CycInt.omega_power(1, p))
    for i in range(2, p - 2, 2):
        labels.append('E_%d' % i)
        elements.append(cyclotomic_unit_E(i, p))
    return labels, elements

def _class_at_inert_prime(x, ell, p, field, zeta):
    """(ord_ell(x) mod p, chi of the residue) for x in Z[ω] with ell inert."""
    if x.is_rational():
        n = x.coeffs[0]
        v = multiplicity(ell, abs(n))
        residue = field.constant(n // ell ** v)
        return v % p, chi_exponent(field, residue, p)
    residue = x.evaluate_in(field, zeta)
    return 0, chi_exponent(field, residue, p)

def _format_vector(labels, vector):
    return {label: e for label, e in zip(labels, vector) if e}

def selmer_direct(r, delta, p, M=DEFAULT_PRECISION, branch=1):
    """Ker(R^x/R^xp -> prod_V K_V^x/Im) by linear algebra over F_p.

    Args:
        branch (int): Residue of (ω̂ - 1)/λ selecting the embedding of Z[ω] into K_Π.
            The kernel does not depend on it.
    """
    record = check_hypotheses(r, delta, p)
    reduced = arith.reduce_delta(delta, p)
    delta = reduced.delta
    B = arith.B_value(r, delta, p)
    labels, elements = s_unit_generators(delta, p)
    n = len(elements)

    pi_classes = [local_class_at_pi(x, p, M, branch) for x in elements]
    class_rows = [[c[j] for c in pi_classes] for j in range(p + 1)]
    conditions = []
    image = local_image_at_p(r, delta, p)
    for j in range(p + 1):
        if j not in image.indices:
            conditions.append(class_rows[j])

    for ell in sorted(reduced.factorization):
        field = build_field(ell, p - 1)
        zeta = field.zeta(p)
        m = reduced.factorization[ell]
        delta_chi = chi_exponent(field, field.constant(delta // ell ** m), p)
        ords, chis = [], []
        for x in elements:
            o, c = _class_at_inert_prime(x, ell, p, field, zeta)
            ords.append(o)
            chis.append(c)
        class_rows.extend([ords, chis])
        # (o, c) lies on the line spanned by (m, delta_chi).
        conditions.append([(o * delta_chi - c * m) % p for o, c in zip(ords, chis)])

    rank = arith.rank_mod_p(class_rows, n, p)
    if rank != n:
        raise HypothesisError('S-unit classes have rank %d, expected %d' % (rank, n), record)

    basis = arith.nullspace_mod_p(conditions, n, p)
    basis_dicts = [_format_vector(labels, v) for v in basis]
    generators = ['*'.join('%s^%d' % (k, e) if e != 1 else k for k, e in sorted(d.items()))
                  for d in basis_dicts]
    log_message('selmer', 'Direct kernel for (p=%d, r=%d, delta=%d) has dimension %d'
                % (p, r, delta, len(basis)), logging.DEBUG)
    return SelmerReport(p, r, delta, B, arith.b_symbol(B, p), generators, len(basis),
                        len(basis) - 1, 'direct', record, basis_dicts)

def same_span(first, second, p):
    """Whether two Selmer reports describe the same subgroup of R^x/R^xp."""
    labels = sorted(set(_report_labels(first)) | set(_report_labels(second)))
    a = [_label_vector(d, labels) for d in _report_vectors(first)]
    b = [_label_vector(d, labels) for d in _report_vectors(second)]
    rank_a = arith.rank_mod_p(a, len(labels), p) if a else 0
    rank_b = arith.rank_mod_p(b, len(labels), p) if b else 0
    rank_ab = arith.rank_mod_p(a + b, len(labels), p) if a + b else 0
    return rank_a == rank_b == rank_ab

def _report_vectors(report):
    if report.basis is not None:
        return report.basis
    return [{label: 1} for label in report.generators]

def _report_labels(report):
    labels = []
    for d in _report_vectors(report):
        labels.extend(d)
    return labels

def _label_vector(d, labels):
    return [d.get(label, 0) for label in labels]

def compare_methods(r, delta, p, M=DEFAULT_PRECISION):
    """Run both methods and raise ConsistencyError if they disagree."""
    closed = selmer_closed_form(r, delta, p)
    direct = selmer_direct(r, delta, p, M)
    if closed.dimension != direct.dimension or not same_span(closed, direct, p):
        raise ConsistencyError('Closed form and direct Selmer computations disagree',
                               {'closed': closed.to_dict(), 'direct': direct.to_dict()})
    return closed, direct

def torsion_dimension(delta, p):
    """dim_F_p of J(K)_tor / Π J(K)_tor."""
    return torsion_summary(delta, p)['quotient_dimension']
