"""
Orden, ínfimo (wedge), distancia y direcciones sobre elementos simbólicos.

El punto de ramificación se decide fusionando los flujos de saltos de ambos
elementos en orden creciente de posición. Los cúmulos se desdoblan de forma
perezosa; cuando los dos flujos llegan a cúmulos con el mismo límite se
registra su estado reescalado y, si se repite, ambos coinciden hasta el
límite.
"""
import logging
from dataclasses import dataclass, replace
from fractions import Fraction

from django.conf import settings

from .elements import (
    RampCluster,
    Step,
    block_start,
    evaluate,
    extend_step,
    first_label,
    prefix,
    unfold_first,
)
from .exceptions import AlphabetMismatchError, DomainError, UndecidedError

logger = logging.getLogger(__name__)

DEFAULT_UNFOLD_CAP = 100000


def unfold_cap(cap=None):
    if cap is not None:
        return cap
    return getattr(settings, 'RTREE_UNFOLD_CAP', DEFAULT_UNFOLD_CAP)


def check_alphabets(*elements):
    first = elements[0].alphabet
    for element in elements[1:]:
        if element.alphabet != first:
            raise AlphabetMismatchError(first, element.alphabet)


def branch_point(f, g, cap=None):
    """rho de f ∧ g"""
    check_alphabets(f, g)
    bound = min(f.rho, g.rho)
    cap = unfold_cap(cap)
    try:
        divergence = _first_divergence(list(f.blocks), list(g.blocks), bound, cap)
    except RecursionError:
        logger.warning('Anidamiento de copias demasiado profundo al desdoblar')
        raise UndecidedError(cap) from None
    if divergence is None:
        return bound
    return min(divergence, bound)


def _shape(cluster):
    """Cúmulo sin escala ni desfase de rampa, para comparar estados"""
    if isinstance(cluster, RampCluster):
        return replace(cluster, offset=Fraction(1), skip=0)
    return replace(cluster, offset=Fraction(1))


def _skip(cluster):
    return cluster.skip if isinstance(cluster, RampCluster) else 0


def _periodic_pair(left, right):
    """
    Dos cúmulos cuyas copias avanzan al mismo ritmo: ninguno es rampa, o
    ambos son rampas de la misma gamma.
    """
    ramps = (isinstance(left, RampCluster), isinstance(right, RampCluster))
    if not any(ramps):
        return True
    return all(ramps) and left.gamma == right.gamma


def _first_divergence(left, right, bound, cap):
    seen = set()
    events = 0
    while True:
        events += 1
        if events > cap:
            logger.warning('Tope de desdoblamiento alcanzado (%s eventos)', cap)
            raise UndecidedError(cap)
        if not left and not right:
            return None
        left_start = block_start(left[0]) if left else None
        right_start = block_start(right[0]) if right else None
        start = min(s for s in (left_start, right_start) if s is not None)
        if start >= bound:
            return None
        if left_start != right_start:
            return start

        head_left, head_right = left[0], right[0]
        if head_left == head_right:
            left.pop(0)
            right.pop(0)
            continue
        if first_label(head_left) != first_label(head_right):
            return start
        left_step = isinstance(head_left, Step)
        right_step = isinstance(head_right, Step)
        if left_step and right_step:
            left.pop(0)
            right.pop(0)
            continue
        if left_step or right_step:
            stream, cluster = (right, head_right) if left_step else (left, head_left)
            stream[0:1] = unfold_first(cluster)
            continue

        if head_left.limit == head_right.limit and _periodic_pair(head_left, head_right):
            key = (
                _shape(head_left),
                _shape(head_right),
                head_right.offset / head_left.offset,
                _skip(head_right) - _skip(head_left),
                tuple(left[1:]),
                tuple(right[1:]),
            )
            if key in seen:
                logger.debug('Ciclo detectado en el límite %s tras %s eventos', head_left.limit, events)
                left.pop(0)
                right.pop(0)
                if head_left.terminal or head_right.terminal or head_left.label != head_right.label:
                    return head_left.limit
                continue
            seen.add(key)
        left[0:1] = unfold_first(head_left)
        right[0:1] = unfold_first(head_right)


def wedge(f, g, cap=None):
    """f ∧ g: el prefijo común más largo"""
    return prefix(f, branch_point(f, g, cap))


def dist(f, g, cap=None):
    """d(f, g) = rho_f + rho_g - 2 rho_{f∧g}"""
    return f.rho + g.rho - 2 * branch_point(f, g, cap)


def leq(f, g, cap=None):
    """f ⪯ g: f es prefijo de g"""
    return branch_point(f, g, cap) == f.rho


def same_point(f, g, cap=None):
    return dist(f, g, cap) == 0


def point_on_segment(f, g, t, cap=None):
    """
    Punto a distancia t de f sobre la geodésica [f, g], que pasa por f ∧ g.
    """
    t = Fraction(t)
    s = branch_point(f, g, cap)
    total = f.rho + g.rho - 2 * s
    if not 0 <= t <= total:
        raise DomainError(f'Parámetro {t} fuera de [0, {total}]')
    down = f.rho - s
    if t <= down:
        return prefix(f, f.rho - t)
    return prefix(g, s + (t - down))


@dataclass(frozen=True)
class Direction:
    """Dirección en un punto: hacia abajo o hacia arriba con una etiqueta"""

    kind: str
    label: int = None

    @classmethod
    def up(cls, label):
        return cls('up', label)

    def __str__(self):
        return 'down' if self.kind == 'down' else f'up {self.label}'


DOWN = Direction('down')


def classify_direction(x, g, cap=None):
    s = branch_point(x, g, cap)
    if s < x.rho:
        return DOWN
    if g.rho == x.rho:
        raise DomainError('El punto de prueba coincide con x')
    return Direction.up(evaluate(g, x.rho))


def enumerate_directions(x):
    """
    Un representante por dirección en x: kappa = m + 1 para un alfabeto de
    m etiquetas.
    """
    labels = x.alphabet.labels()
    directions = [(DOWN, prefix(x, x.rho - 1))]
    for label in labels:
        directions.append((Direction.up(label), extend_step(x, label, 1)))
    return directions
