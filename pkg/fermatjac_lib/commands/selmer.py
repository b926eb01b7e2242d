from fermatjac_lib.core import selmer
from fermatjac_lib.core.utils import parse_delta
from .base import BaseCommand, Command, Category

def make_command():
    return Command(Selmer)

class Selmer(BaseCommand):
    name = 'selmer'
    description = 'Pi-Selmer group of J_{r,1,p-r-1;delta} over Q(zeta_p).'
    category = Category.Selmer

    def add_arguments(self, parser):
        parser.add_argument('--p', type=int, required=True)
        parser.add_argument('--r', type=int, required=True)
        parser.add_argument('--delta', type=parse_delta, required=True)
        parser.add_argument('--method', choices=('closed', 'direct', 'both'), default='closed')

    def run(self, args):
        M = self.option('padic_prec')
        if args.method == 'closed':
            reports = [selmer.selmer_closed_form(args.r, args.delta, args.p)]
        elif args.method == 'direct':
            reports = [selmer.selmer_direct(args.r, args.delta, args.p, M)]
        else:
            reports = list(selmer.compare_methods(args.r, args.delta, args.p, M))
            self.info('closed form and direct kernel agree (dimension %d)' % reports[0].dimension)
        documents = [r.to_dict() for r in reports]
        rows = []
        for d in documents:
            rows.append({'method': d['method'], 'p': d['p'], 'r': d['r'], 'delta': d['delta'],
                         'B': d['B'], 'b': d['b'], 'dimension': d['dimension'], 'S': d['S'],
                         'generators': d['generators']})
        document = documents[0] if len(documents) == 1 else {'reports': documents,
                                                              'dimension': documents[0]['dimension']}
        return self.output(document, rows)
