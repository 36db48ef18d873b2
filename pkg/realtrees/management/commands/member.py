"""
Comando para decidir la pertenencia a T^[alpha]
"""
from realtrees.cbrank import complexity, member

from ._base import RealTreeCommand


class Command(RealTreeCommand):
    help = 'Decide si comp(f) <= alpha, es decir, si f pertenece a T^[alpha]'

    def add_command_arguments(self, parser):
        parser.add_argument('f')
        parser.add_argument('--alpha', required=True, help="Ordinal, por ejemplo 'w + 1'")

    def run(self, config, **options):
        f = self.load_element(options['f'])
        alpha = self.ordinal(options['alpha'])
        result = member(f, alpha)
        self.emit('true' if result else 'false', {
            'member': result,
            'alpha': str(alpha),
            'complexity': str(complexity(f)),
        })
