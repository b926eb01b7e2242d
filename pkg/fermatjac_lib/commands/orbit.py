from fermatjac_lib.core.arith import triple_orbit
from fermatjac_lib.core.cyclotomic import cm_type
from .base import BaseCommand, Command, Category, add_triple_arguments, triple_from_args

def make_command():
    return Command(Orbit)

class Orbit(BaseCommand):
    name = 'orbit'
    description = 'Triples birationally equivalent to (r, s, t).'
    category = Category.General

    def add_arguments(self, parser):
        add_triple_arguments(parser)

    def run(self, args):
        triple = triple_from_args(args)
        rows = []
        for other in triple_orbit(triple):
            rows.append({'r': other.r, 's': other.s, 't': other.t,
                         'cm_type': sorted(cm_type(other).elements)})
        h, reduced = triple.reduced()
        document = {'p': triple.p, 'triple': list(triple), 'orbit': rows,
                    'reduced': list(reduced), 'h': h}
        return self.output(document, rows, ['r', 's', 't', 'cm_type'])
