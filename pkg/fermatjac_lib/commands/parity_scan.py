from fermatjac_lib.core.errors import ConsistencyError
from fermatjac_lib.core.parity import parity_scan, PARITY_FIELDS
from fermatjac_lib.core.utils import parse_triples
from .base import BaseCommand, Command, Category

def make_command():
    return Command(ParityScan)

class ParityScan(BaseCommand):
    name = 'parity-scan'
    description = 'Check eps = (-1)^S for all admissible delta up to a bound.'
    category = Category.Experiments

    def add_arguments(self, parser):
        parser.add_argument('--p', type=int, required=True)
        parser.add_argument('--delta-max', type=int, required=True)
        parser.add_argument('--triples', type=parse_triples, default=None,
                            help='Comma-separated r:s:t list; defaults to every (r, 1, p-r-1).')
        parser.add_argument('--min-cases', type=int, default=1)

    def run(self, args):
        report = parity_scan(args.p, args.delta_max, args.triples, self.option('workers'))
        if report.cases < args.min_cases:
            raise ConsistencyError('Only %d cases were checked, fewer than %d'
                                   % (report.cases, args.min_cases), {'filtered': report.filtered})
        self.info('%d cases checked, %d filtered' % (report.cases, sum(report.filtered.values())))
        return self.output(report.to_dict(), report.rows(), list(PARITY_FIELDS))
