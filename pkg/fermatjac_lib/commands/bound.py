from fermatjac_lib.core import selmer
from fermatjac_lib.core.utils import parse_delta
from .base import BaseCommand, Command, Category

def make_command():
    return Command(Bound)

class Bound(BaseCommand):
    name = 'bound'
    description = 'Upper bounds for dim Sel when the closed form is unavailable.'
    category = Category.Selmer

    def add_arguments(self, parser):
        parser.add_argument('--p', type=int, required=True)
        parser.add_argument('--delta', type=parse_delta, required=True)
        parser.add_argument('--dim-cl', type=int, default=None, help='dim Cl(Q(zeta_p))[p].')
        parser.add_argument('--assume-principal', action='store_true',
                            help='Allow split prime factors, assuming their places are principal.')

    def run(self, args):
        document = {'p': args.p, 'delta': args.delta, 'dim_cl': args.dim_cl,
                    'upper_bound': selmer.selmer_upper_bound(args.delta, args.p, args.dim_cl,
                                                             args.assume_principal)}
        if args.dim_cl is not None:
            document['class_bound'] = selmer.selmer_class_bound(args.delta, args.p, args.dim_cl,
                                                                args.assume_principal)
        return self.output(document)
