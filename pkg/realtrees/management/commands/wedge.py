"""
Comando para calcular el ínfimo f ∧ g
"""
from realtrees.metric import wedge
from realtrees.serializers import format_rational, serialize, serialize_document

from ._base import RealTreeCommand


class Command(RealTreeCommand):
    help = 'Ínfimo f ∧ g: el prefijo común más largo'

    def add_command_arguments(self, parser):
        parser.add_argument('f')
        parser.add_argument('g')

    def run(self, config, **options):
        f, g = self.load_elements(options['f'], options['g'])
        meet = wedge(f, g, config.cap)
        self.emit(serialize_document(meet), {
            'wedge': serialize(meet),
            'rho': format_rational(meet.rho),
            'alphabet': str(meet.alphabet),
        })
