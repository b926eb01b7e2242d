from fermatjac_lib.core.density import density_experiment, DENSITY_FIELDS
from fermatjac_lib.core.errors import ConsistencyError
from fermatjac_lib.core.utils import render_csv
from .base import BaseCommand, Command, Category, add_triple_arguments, triple_from_args

def make_command():
    return Command(Density)

class Density(BaseCommand):
    name = 'density'
    description = 'Fraction of p-th-power-free delta <= X with root number +1.'
    category = Category.Experiments

    def add_arguments(self, parser):
        add_triple_arguments(parser)
        parser.add_argument('--x-max', type=int, required=True)
        parser.add_argument('--per-delta', action='store_true', help='Emit one row per delta.')
        parser.add_argument('--out', default=None, help='Write per-delta CSV rows to this file.')
        parser.add_argument('--check', action='store_true',
                            help='Fail unless the fraction is within density_tolerance of 1/2.')

    def run(self, args):
        triple = triple_from_args(args)
        per_delta = args.per_delta or args.out is not None
        report = density_experiment(args.p, triple, args.x_max, per_delta, self.option('workers'))
        tolerance = self.option('density_tolerance')
        if args.check and not report.within(tolerance):
            raise ConsistencyError('Fraction %.4f is not within %s of 1/2' % (report.fraction, tolerance))
        if args.out is not None:
            with open(args.out, 'w') as f:
                f.write(render_csv(report.rows, list(DENSITY_FIELDS)))
            self.info('Wrote %d rows to %s' % (len(report.rows), args.out))
        if args.per_delta:
            return self.output(report.to_dict(), report.rows, list(DENSITY_FIELDS))
        return self.output(report.to_dict(), [report.summary_row()])
