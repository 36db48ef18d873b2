"""
Comando para aplicar una isometría a un elemento
"""
from realtrees.exceptions import AlphabetMismatchError
from realtrees.serializers import parse, serialize, serialize_document

from ._base import RealTreeCommand


class Command(RealTreeCommand):
    help = 'Aplica una isometría, p. ej. (compose (branch-swap ELEM) (translate -3/2) (reflect))'

    def add_command_arguments(self, parser):
        parser.add_argument('isometry', help='Fichero (o forma en línea) de la isometría')
        parser.add_argument('f')

    def run(self, config, **options):
        alphabet, phi = self.load_isometry(options['isometry'])
        element = parse(self.read_source(options['f']), alphabet)
        if element.alphabet != alphabet:
            raise AlphabetMismatchError(alphabet, element.alphabet)
        image = phi.apply(element, config.cap)
        self.emit(serialize_document(image), {'image': serialize(image), 'alphabet': str(alphabet)})
