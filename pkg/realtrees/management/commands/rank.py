"""
Comando para calcular la complejidad (rango de Cantor-Bendixson)
"""
from realtrees.cbrank import (
    complexity,
    jump_set,
    order_type,
    pair_complexity,
    rank_from_order_type,
)
from realtrees.serializers import serialize_points

from ._base import RealTreeCommand


class Command(RealTreeCommand):
    help = 'Complejidad comp(f) en forma normal de Cantor; con --base, comp(base, f)'

    def add_command_arguments(self, parser):
        parser.add_argument('f')
        parser.add_argument(
            '--base',
            help='Prefijo estricto a de f: calcula comp(a, f) sobre [rho_a, rho_f]',
        )

    def run(self, config, **options):
        f = self.load_element(options['f'])
        if options.get('base'):
            a, f = self.load_elements(options['base'], options['f'])
            value = pair_complexity(a, f, config.cap)
        else:
            value = complexity(f)
        points = jump_set(f)
        self.emit(str(value), {
            'rank': str(value),
            'order_type': str(order_type(points)),
            'oracle_rank': str(rank_from_order_type(points)),
            'jump_set': serialize_points(points),
        })
