"""
Comando para calcular la distancia exacta entre dos elementos
"""
from realtrees.metric import dist
from realtrees.serializers import format_rational

from ._base import RealTreeCommand


class Command(RealTreeCommand):
    help = 'Distancia d(f, g) = rho_f + rho_g - 2 rho_(f∧g) como racional exacto'

    def add_command_arguments(self, parser):
        parser.add_argument('f', help='Fichero (o forma en línea) del primer elemento')
        parser.add_argument('g', help='Fichero (o forma en línea) del segundo elemento')

    def run(self, config, **options):
        f, g = self.load_elements(options['f'], options['g'])
        value = format_rational(dist(f, g, config.cap))
        self.emit(value, {'dist': value})
