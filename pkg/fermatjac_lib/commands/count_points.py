from fermatjac_lib.core import cyclotomic, finite_field
from fermatjac_lib.core.errors import ConsistencyError
from fermatjac_lib.core.utils import parse_delta
from .base import BaseCommand, Command, Category, add_triple_arguments, triple_from_args

def make_command():
    return Command(CountPoints)

class CountPoints(BaseCommand):
    name = 'count-points'
    description = 'Count points of y^p = x^r (delta - x)^s over F_{ell^f}.'
    category = Category.Fields

    def add_arguments(self, parser):
        parser.add_argument('--ell', type=int, required=True)
        parser.add_argument('--f', type=int, default=1)
        add_triple_arguments(parser)
        parser.add_argument('--delta', type=parse_delta, required=True)
        parser.add_argument('--zeta', action='store_true',
                            help='Also compute the numerator of the zeta function over F_ell.')

    def run(self, args):
        triple = triple_from_args(args)
        field = finite_field.build_field(args.ell, args.f)
        affine = finite_field.count_affine_points(field, triple, args.delta)
        projective = affine - 2 + finite_field.places_over_branch_points(triple)
        document = {'p': triple.p, 'r': triple.r, 's': triple.s, 't': triple.t,
                    'delta': args.delta, 'ell': args.ell, 'f': args.f, 'q': field.q,
                    'affine': affine, 'projective': projective}
        if (field.q - 1) % triple.p == 0:
            predicted = cyclotomic.character_sum_count(field, triple, args.delta)
            document['character_sum'] = predicted
            if predicted != affine:
                raise ConsistencyError('Character sum predicts %d points, counted %d'
                                       % (predicted, affine), document)
        if args.zeta:
            document['zeta_numerator'] = finite_field.zeta_numerator(args.ell, triple, args.delta)
        return self.output(document)
