from fermatjac_lib.core import arith, cyclotomic, finite_field
from fermatjac_lib.core.errors import ConsistencyError
from .base import BaseCommand, Command, Category, add_triple_arguments, triple_from_args

def make_command():
    return Command(Jacobi)

class Jacobi(BaseCommand):
    """Jacobi sum at the places over ell with its identities."""
    name = 'jacobi'
    description = 'Jacobi sum j_{r,s,t} over F_{ell^f} and its identities.'
    category = Category.Fields

    def add_arguments(self, parser):
        parser.add_argument('--ell', type=int, required=True)
        add_triple_arguments(parser, r_default=1)

    def run(self, args):
        triple = triple_from_args(args)
        p = triple.p
        data = arith.splitting_data(args.ell, p)
        q = args.ell ** data.f
        if q > finite_field.chi_table_limit:
            raise ValueError('F_%d^%d is larger than chi_table_limit=%d'
                             % (args.ell, data.f, finite_field.chi_table_limit))
        field = finite_field.build_field(args.ell, data.f)
        j = cyclotomic.jacobi_sum(field, triple, p)
        norm = j.norm()
        if norm != q:
            raise ConsistencyError('j * conj(j) = %d differs from q = %d' % (norm, q))
        formula, places = cyclotomic.phi_ell_paths(triple, args.ell, p)
        document = {'p': p, 'ell': args.ell, 'f': data.f, 'q': q,
                    'r': triple.r, 's': triple.s, 't': triple.t,
                    'j': list(j.coeffs), 'norm': norm,
                    'congruence': cyclotomic.jacobi_congruence(j, p),
                    'cm_type': sorted(cyclotomic.cm_type(triple).elements),
                    'phi_formula': formula, 'phi_places': places}
        if args.ell % p == 1:
            document['stickelberger'] = cyclotomic.stickelberger_check(triple, args.ell)
        if formula != places:
            raise ConsistencyError('phi_ell paths disagree', document)
        return self.output(document)
