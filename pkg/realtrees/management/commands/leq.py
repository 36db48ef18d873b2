"""
Comando para decidir el orden de prefijos f ⪯ g
"""
from realtrees.metric import leq

from ._base import RealTreeCommand


class Command(RealTreeCommand):
    help = 'Decide si f es prefijo de g (f ⪯ g)'

    def add_command_arguments(self, parser):
        parser.add_argument('f')
        parser.add_argument('g')

    def run(self, config, **options):
        f, g = self.load_elements(options['f'], options['g'])
        result = leq(f, g, config.cap)
        self.emit('true' if result else 'false', {'leq': result})
