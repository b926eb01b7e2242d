from fermatjac_lib.core.root_number import epsilon_global, conductor_exponents, alpha_tau
from fermatjac_lib.core.utils import parse_delta
from .base import BaseCommand, Command, Category, add_triple_arguments, triple_from_args

def make_command():
    return Command(RootNumber)

class RootNumber(BaseCommand):
    """Root number of J_{r,s,t;δ} with local factors and conductor exponents."""
    name = 'root-number'
    description = 'Global root number of J_{r,s,t;delta} and its local factors.'
    category = Category.RootNumbers

    def add_arguments(self, parser):
        add_triple_arguments(parser)
        parser.add_argument('--delta', type=parse_delta, required=True)

    def run(self, args):
        triple = triple_from_args(args)
        report = epsilon_global(triple, args.delta, args.p)
        document = report.to_dict()
        document['conductor'] = conductor_exponents(triple, args.delta, args.p)
        document['conductor']['c_V'] = sorted(document['conductor']['c_V'].items())
        split = alpha_tau(triple, args.delta, args.p)
        document['alpha'], document['tau'] = split.alpha, split.tau
        self.debug('local factors: %s' % report.local_factors())
        return self.output(document, fieldnames=['p', 'r', 's', 't', 'delta', 'eps_inf', 'eps_p',
                                                 'u_X', 'd', 'alpha', 'tau', 'global'])
