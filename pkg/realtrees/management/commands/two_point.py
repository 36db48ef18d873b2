"""
Comando para construir una isometría que lleva un par de puntos a otro
"""
from realtrees.isometries import two_point_map
from realtrees.metric import dist, same_point
from realtrees.serializers import format_rational, serialize_isometry

from ._base import RealTreeCommand


class Command(RealTreeCommand):
    help = 'Isometría psi con psi(a1) = b1 y psi(a2) = b2 si d(a1, a2) = d(b1, b2)'

    def add_command_arguments(self, parser):
        for name in ('a1', 'a2', 'b1', 'b2'):
            parser.add_argument(name)

    def run(self, config, **options):
        a1, a2, b1, b2 = self.load_elements(*(options[name] for name in ('a1', 'a2', 'b1', 'b2')))
        psi = two_point_map(a1, a2, b1, b2, config.cap)
        if not (same_point(psi.apply(a1, config.cap), b1, config.cap)
                and same_point(psi.apply(a2, config.cap), b2, config.cap)):
            self.fail('La isometría construida no alcanza los extremos')
        text = serialize_isometry(psi)
        self.emit(text, {
            'isometry': text,
            'distance': format_rational(dist(a1, a2, config.cap)),
        })
