"""
Comando para enumerar o clasificar las direcciones en un punto
"""
from realtrees.metric import classify_direction, enumerate_directions
from realtrees.serializers import serialize

from ._base import RealTreeCommand


class Command(RealTreeCommand):
    help = 'Un representante por dirección en x (kappa en total); con --probe, la dirección de g'

    def add_command_arguments(self, parser):
        parser.add_argument('x')
        parser.add_argument('--probe', help='Elemento g distinto de x cuya dirección se clasifica')

    def run(self, config, **options):
        if options.get('probe'):
            x, g = self.load_elements(options['x'], options['probe'])
            direction = str(classify_direction(x, g, config.cap))
            self.emit(direction, {'direction': direction})
            return
        x = self.load_element(options['x'])
        found = enumerate_directions(x)
        lines = [f'{direction}: {serialize(representative)}' for direction, representative in found]
        self.emit('\n'.join(lines), {
            'valence': len(found),
            'directions': [
                {'direction': str(direction), 'representative': serialize(representative)}
                for direction, representative in found
            ],
        })
