"""
Comando para construir el elemento testigo de una complejidad dada
"""
from realtrees.cbrank import complexity, witness
from realtrees.serializers import serialize, serialize_document

from ._base import RealTreeCommand


class Command(RealTreeCommand):
    help = 'Testigo canónico de complejidad alpha con saltos en [at - width, at]'

    def add_command_arguments(self, parser):
        parser.add_argument('--alpha', required=True)
        parser.add_argument('--at', default='0', help='Punto de acumulación (racional p/q)')
        parser.add_argument('--width', default='1', help='Anchura positiva (racional p/q)')

    def run(self, config, **options):
        alpha = self.ordinal(options['alpha'])
        element = witness(
            alpha,
            self.rational(options['at']),
            self.rational(options['width']),
            config.alphabet,
        )
        self.emit(serialize_document(element), {
            'witness': serialize(element),
            'alphabet': str(element.alphabet),
            'complexity': str(complexity(element)),
        })
