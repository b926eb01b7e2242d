from fermatjac_lib.core.arith import irregularity_index, curve_genus
from .base import BaseCommand, Command, Category

def make_command():
    return Command(Regular)

class Regular(BaseCommand):
    name = 'regular'
    description = 'Regularity of p and its irregularity index.'
    category = Category.General

    def add_arguments(self, parser):
        parser.add_argument('--p', type=int, required=True)

    def run(self, args):
        regularity = irregularity_index(args.p)
        document = regularity._asdict()
        document['indices'] = list(regularity.indices)
        document['genus'] = curve_genus(args.p)
        return self.output(document)
