"""
Conjuntos de saltos, derivadas de Cantor-Bendixson, rango y complejidad.

Un PointSet es la estructura de saltos sin etiquetas. El rango se calcula por
recursión estructural; el tipo de orden es un oráculo independiente con el
que se contrasta.
"""
import functools
import logging
from dataclasses import dataclass, replace
from fractions import Fraction

from .elements import (
    LabelAlphabet,
    LimitCluster,
    Step,
    make_element,
    slot_index,
    slot_start,
    transform_blocks,
    witness_body,
)
from .exceptions import DomainError, OrdinalError
from .metric import leq
from .ordinals import (
    ONE,
    ZERO,
    Ordinal,
    fundamental_seq,
    ord_add,
    ord_is_successor,
    ord_max,
    ord_succ,
    predecessor,
)
from .validators import validate_positive

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Atom:
    pos: Fraction


@dataclass(frozen=True)
class PointCluster:
    limit: Fraction
    offset: Fraction
    ratio: Fraction
    body: tuple


@dataclass(frozen=True)
class PointRamp:
    limit: Fraction
    offset: Fraction
    ratio: Fraction
    gamma: Ordinal
    skip: int = 0
    deriv: int = 0


@dataclass(frozen=True)
class PointSet:
    blocks: tuple = ()

    @property
    def is_empty(self):
        return not self.blocks


def strip_blocks(blocks):
    out = []
    for block in blocks:
        if isinstance(block, Step):
            out.append(Atom(block.pos))
        elif isinstance(block, LimitCluster):
            out.append(PointCluster(block.limit, block.offset, block.ratio, strip_blocks(block.body)))
        else:
            out.append(PointRamp(block.limit, block.offset, block.ratio, block.gamma, block.skip))
    return tuple(out)


def derive_blocks(blocks):
    out = []
    for block in blocks:
        if isinstance(block, Atom):
            continue
        if isinstance(block, PointRamp):
            out.append(replace(block, deriv=block.deriv + 1))
            continue
        body = derive_blocks(block.body)
        out.append(replace(block, body=body) if body else Atom(block.limit))
    return tuple(out)


@functools.lru_cache(maxsize=None)
def witness_points(beta, deriv=0):
    blocks = strip_blocks(witness_body(beta))
    for _ in range(deriv):
        blocks = derive_blocks(blocks)
    return blocks


def _transform_point(block, shift, scale):
    if isinstance(block, Atom):
        return Atom(shift + scale * block.pos)
    return replace(block, limit=shift + scale * block.limit, offset=scale * block.offset)


def point_copy(cluster, k):
    if isinstance(cluster, PointRamp):
        body = witness_points(fundamental_seq(cluster.gamma, k + cluster.skip), cluster.deriv)
    else:
        body = cluster.body
    scale = cluster.offset * cluster.ratio ** k * (1 - cluster.ratio)
    shift = slot_start(cluster, k)
    return tuple(_transform_point(block, shift, scale) for block in body)


def point_tail(cluster, k):
    tail = replace(cluster, offset=cluster.offset * cluster.ratio ** k)
    if isinstance(cluster, PointRamp):
        tail = replace(tail, skip=cluster.skip + k)
    return tail


def jump_set(element):
    """P_f: clausura de los puntos de variación por la izquierda"""
    return PointSet(strip_blocks(element.blocks))


def derivative(points):
    """Una derivada de Cantor-Bendixson: elimina los puntos aislados"""
    return PointSet(derive_blocks(points.blocks))


def _rank(blocks):
    rank = ZERO
    for block in blocks:
        if isinstance(block, Atom):
            block_rank = ONE
        elif isinstance(block, PointCluster):
            block_rank = ord_succ(_rank(block.body))
        else:
            # copias de rango no acotado bajo gamma: el límite sobrevive hasta gamma
            block_rank = ord_succ(block.gamma)
        rank = ord_max(rank, block_rank)
    return rank


def cb_rank(points):
    return _rank(points.blocks)


def _order_type(blocks):
    total = ZERO
    for block in blocks:
        total = ord_add(total, _block_order_type(block))
    return total


def _block_order_type(block):
    if isinstance(block, Atom):
        return ONE
    if isinstance(block, PointCluster):
        exponent = ord_succ(_order_type(block.body).leading_exponent)
    else:
        exponent = _ramp_exponent(block)
    return ord_add(Ordinal.omega_power(exponent), ONE)


def _ramp_exponent(ramp):
    """
    Supremo de los exponentes principales de las copias, extrapolado a partir
    de dos copias consecutivas suficientemente avanzadas.
    """
    n = ramp.skip + ramp.deriv + 3
    first = _order_type(witness_points(fundamental_seq(ramp.gamma, n), ramp.deriv))
    second = _order_type(witness_points(fundamental_seq(ramp.gamma, n + 1), ramp.deriv))
    return sup_of_progression(first.leading_exponent, second.leading_exponent)


def sup_of_progression(a, b):
    """
    Supremo de la progresión de la que a < b son términos consecutivos: el
    primer término en que difieren crece en coeficiente o en exponente.
    """
    for index, term in enumerate(b.terms):
        other = a.terms[index] if index < len(a.terms) else None
        if other == term:
            continue
        head = Ordinal(b.terms[:index])
        exponent = term[0]
        if other is None or other[0] == exponent:
            return ord_add(head, Ordinal.omega_power(ord_succ(exponent)))
        return ord_add(head, Ordinal.omega_power(sup_of_progression(other[0], exponent)))
    raise OrdinalError(f'{a} y {b} no forman una progresión creciente')


def order_type(points):
    return _order_type(points.blocks)


def rank_from_order_type(points):
    """Rango a partir del tipo de orden: e + 1 con e el exponente principal de tipo - 1"""
    otype = order_type(points)
    if otype.is_zero:
        return ZERO
    if otype.is_finite:
        return ONE
    if not ord_is_successor(otype):
        raise DomainError(f'Tipo de orden {otype} de un compacto no vacío debe ser sucesor')
    return ord_succ(predecessor(otype).leading_exponent)


def _restrict(blocks, lo, hi):
    out = []
    for block in blocks:
        if isinstance(block, Atom):
            if lo <= block.pos <= hi:
                out.append(block)
            continue
        first = slot_start(block, 0)
        if block.limit < lo or first > hi:
            continue
        if lo <= first and block.limit <= hi:
            out.append(block)
            continue
        if lo >= block.limit:
            out.append(Atom(block.limit))
            continue
        k = 0 if lo <= first else slot_index(block, lo)
        while slot_start(block, k) <= hi:
            out.extend(_restrict(point_copy(block, k), lo, hi))
            if hi >= block.limit:
                out.append(point_tail(block, k + 1))
                break
            k += 1
    return tuple(out)


def restrict_set(points, lo, hi):
    """Intersección simbólica con [lo, hi]"""
    lo, hi = Fraction(lo), Fraction(hi)
    if lo > hi:
        raise DomainError(f'Intervalo vacío [{lo}, {hi}]')
    return PointSet(_restrict(points.blocks, lo, hi))


def complexity(element):
    return cb_rank(jump_set(element))


def pair_complexity(a, b, cap=None):
    """comp(a, b): rango de P_b ∩ [rho_a, rho_b] con a ≺ b"""
    if not (a.rho < b.rho and leq(a, b, cap)):
        raise DomainError('pair_complexity requiere que a sea prefijo estricto de b')
    return cb_rank(restrict_set(jump_set(b), a.rho, b.rho))


def member(element, alpha):
    """f pertenece a T^[alpha] si comp(f) <= alpha"""
    return complexity(element) <= alpha


def witness(alpha, at, width, alphabet):
    """
    Elemento canónico de complejidad alpha con saltos en [at - width, at] y
    rho = at + width.
    """
    if alpha.is_zero or not ord_is_successor(alpha):
        raise OrdinalError(
            f'Las complejidades son 0 o sucesores; no hay testigo de complejidad {alpha}'
        )
    at, width = Fraction(at), Fraction(width)
    validate_positive(width, 'anchura')
    blocks = transform_blocks(witness_body(alpha), at - width, 2 * width)
    return make_element(at + width, blocks, alphabet)


def witness_set(alpha):
    return jump_set(witness(alpha, Fraction(0), Fraction(1), LabelAlphabet.finite(2)))

