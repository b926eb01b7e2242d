import random

from fermatjac_lib.core import arith, selmer
from fermatjac_lib.core.errors import ConsistencyError
from fermatjac_lib.core.local_field import LocalElt, get_local_field
from fermatjac_lib.core.utils import parse_delta
from .base import BaseCommand, Command, Category

def make_command():
    return Command(LocalImageCommand)

class LocalImageCommand(BaseCommand):
    name = 'local-image'
    description = 'Images of the local Kummer maps at Pi and at the primes dividing delta.'
    category = Category.Local

    def add_arguments(self, parser):
        parser.add_argument('--p', type=int, required=True)
        parser.add_argument('--r', type=int, required=True)
        parser.add_argument('--delta', type=parse_delta, required=True)
        parser.add_argument('--check', type=int, default=0, metavar='N',
                            help='Run N randomized checks of the local-field machinery.')

    def run(self, args):
        p = args.p
        delta = arith.reduce_delta(args.delta, p).delta
        at_p = selmer.local_image_at_p(args.r, delta, p)
        rows = [{'place': at_p.place, 'kind': at_p.kind,
                 'indices': sorted(at_p.indices), 'dimension': at_p.dimension}]
        for ell in sorted(arith.reduce_delta(delta, p).factorization):
            if ell == p:
                continue
            image = selmer.local_image_off_p(ell, delta, p)
            rows.append({'place': ell, 'kind': image.kind, 'indices': [], 'dimension': image.dimension})
        document = {'p': p, 'r': args.r, 'delta': delta, 'images': rows}
        if args.check:
            document['checks'] = self.self_check(p, args.check)
        return self.output(document, rows, ['place', 'kind', 'indices', 'dimension'])

    def self_check(self, p, n):
        local = get_local_field(p, self.option('padic_prec'))
        rng = random.Random(self.option('seed'))
        for _ in range(n):
            exponents = [rng.randrange(p) for _ in range(p + 1)]
            x = LocalElt.constant(1, p, local.M)
            for u, e in zip(local.generators, exponents):
                x = x * u ** e
            if list(local.unit_class(x).exponents) != exponents:
                raise ConsistencyError('unit_class does not recover %s' % exponents)
            if local.is_pth_power(x) != (not any(exponents)):
                raise ConsistencyError('is_pth_power misclassifies %s' % exponents)
        self.info('%d randomized local-field checks passed' % n)
        return n
