"""
Envolvente convexa finita de varios elementos y su exportación a DOT.

Los vértices son las entradas más sus ínfimos dos a dos; cada vértice cuelga
del vértice más alto que tiene por debajo y la arista pesa la diferencia de
rho.
"""
import logging
from dataclasses import dataclass, field
from itertools import combinations

import graphviz

from .exceptions import DomainError
from .metric import check_alphabets, leq, same_point, wedge
from .serializers import format_rational

logger = logging.getLogger(__name__)


@dataclass
class HullVertex:
    element: object
    names: list = field(default_factory=list)

    @property
    def label(self):
        return ' '.join(self.names + [f'rho={format_rational(self.element.rho)}'])


@dataclass(frozen=True)
class HullEdge:
    parent: int
    child: int
    length: object


@dataclass
class Hull:
    vertices: list
    edges: list

    def total_length(self):
        return sum((edge.length for edge in self.edges), 0)


def convex_hull(elements, cap=None):
    elements = list(elements)
    if len(elements) < 2:
        raise DomainError('La envolvente necesita al menos dos elementos')
    check_alphabets(*elements)
    vertices = []

    def add(element, name=None):
        for vertex in vertices:
            if same_point(vertex.element, element, cap):
                if name:
                    vertex.names.append(name)
                return
        vertices.append(HullVertex(element, [name] if name else []))

    for index, element in enumerate(elements, start=1):
        add(element, f'f{index}')
    for left, right in combinations(elements, 2):
        add(wedge(left, right, cap))

    edges = []
    for index, vertex in enumerate(vertices):
        below = [
            (other.element.rho, position)
            for position, other in enumerate(vertices)
            if other.element.rho < vertex.element.rho and leq(other.element, vertex.element, cap)
        ]
        if below:
            rho, parent = max(below)
            edges.append(HullEdge(parent, index, vertex.element.rho - rho))
    logger.debug('Envolvente con %s vértices y %s aristas', len(vertices), len(edges))
    return Hull(vertices, edges)


def to_dot(hull):
    graph = graphviz.Graph('hull')
    for index, vertex in enumerate(hull.vertices):
        graph.node(f'v{index}', vertex.label)
    for edge in hull.edges:
        graph.edge(f'v{edge.parent}', f'v{edge.child}', label=format_rational(edge.length))
    return graph.source
