"""
Comando para exportar la envolvente convexa de varios elementos en DOT
"""
from realtrees.hull import convex_hull, to_dot
from realtrees.serializers import format_rational, serialize

from ._base import RealTreeCommand


class Command(RealTreeCommand):
    help = 'Envolvente convexa finita (entradas e ínfimos dos a dos) como grafo DOT'
    formats = ('dot', 'json')

    def add_command_arguments(self, parser):
        parser.add_argument('elements', nargs='+', help='Dos o más elementos')

    def run(self, config, **options):
        hull = convex_hull(self.load_elements(*options['elements']), config.cap)
        self.emit(to_dot(hull), {
            'vertices': [
                {'name': f'v{index}', 'label': vertex.label, 'element': serialize(vertex.element)}
                for index, vertex in enumerate(hull.vertices)
            ],
            'edges': [
                {'from': f'v{edge.parent}', 'to': f'v{edge.child}', 'length': format_rational(edge.length)}
                for edge in hull.edges
            ],
        })
