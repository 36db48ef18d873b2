"""
Representación simbólica de los puntos de T_kappa.

Un elemento es una función (-inf, rho) -> etiquetas, constante por la derecha,
nula antes del primer salto y con un conjunto de saltos numerable, compacto y
bien ordenado. Los saltos se describen con una gramática recursiva finita:

- Step(pos, label): salto en pos a label.
- LimitCluster: copias reescaladas de un cuerpo que se acumulan en `limit`.
  La copia k ocupa [limit - offset*ratio^k, limit - offset*ratio^(k+1)) y el
  cuerpo vive en coordenadas normalizadas [0, 1).
- RampCluster: como LimitCluster, pero la copia k lleva el testigo canónico de
  rango fundamental_seq(gamma, k + skip).

Un cúmulo terminal tiene limit = rho y no aporta etiqueta en el límite.
"""
import functools
import logging
from dataclasses import dataclass, replace
from fractions import Fraction

from django.core.exceptions import ValidationError

from .exceptions import DomainError, OrdinalError
from .ordinals import (
    ONE,
    Ordinal,
    fundamental_seq,
    ord_is_limit,
    ord_is_successor,
    predecessor,
)
from .validators import (
    LabelValidator,
    RatioValidator,
    validate_positive,
)

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class LabelAlphabet:
    """
    Alfabeto de etiquetas C_kappa con la etiqueta distinguida 0.

    Finito con m etiquetas (0..m-1) modela kappa = m + 1; size None modela
    kappa numerable.
    """

    size: int = None

    @classmethod
    def finite(cls, size):
        if not isinstance(size, int) or size < 2:
            raise ValidationError(
                'Un alfabeto finito necesita al menos 2 etiquetas. Valor actual: %(size)s',
                code='invalid_alphabet',
                params={'size': size},
            )
        return cls(size)

    @classmethod
    def countable(cls):
        return cls(None)

    @classmethod
    def for_kappa(cls, kappa):
        if str(kappa).strip().lower() in ('countable', 'aleph0', 'w'):
            return cls.countable()
        try:
            return cls.finite(int(kappa) - 1)
        except (TypeError, ValueError):
            raise ValidationError(
                'Valencia kappa no válida: %(kappa)s',
                code='invalid_kappa',
                params={'kappa': kappa},
            )

    @property
    def is_finite(self):
        return self.size is not None

    @property
    def kappa(self):
        return self.size + 1 if self.is_finite else 'aleph0'

    def __contains__(self, label):
        if isinstance(label, bool) or not isinstance(label, int) or label < 0:
            return False
        return self.size is None or label < self.size

    def labels(self):
        if not self.is_finite:
            raise DomainError('Un alfabeto numerable no se puede enumerar')
        return range(self.size)

    def __str__(self):
        return f'finite {self.size}' if self.is_finite else 'countable'


def parse_alphabet(text):
    """Lee 'finite 3' o 'countable'"""
    words = str(text).split()
    if words == ['countable']:
        return LabelAlphabet.countable()
    if len(words) == 2 and words[0] == 'finite' and words[1].isdigit():
        return LabelAlphabet.finite(int(words[1]))
    raise ValidationError(
        'Alfabeto mal formado: %(text)s',
        code='invalid_alphabet',
        params={'text': text},
    )


@dataclass(frozen=True)
class Step:
    pos: Fraction
    label: int


@dataclass(frozen=True)
class LimitCluster:
    limit: Fraction
    offset: Fraction
    ratio: Fraction
    body: tuple
    label: int = None
    terminal: bool = False


@dataclass(frozen=True)
class RampCluster:
    limit: Fraction
    offset: Fraction
    ratio: Fraction
    gamma: Ordinal
    label: int = None
    terminal: bool = False
    skip: int = 0
    up: int = 1
    down: int = 0


@dataclass(frozen=True)
class Element:
    rho: Fraction
    alphabet: LabelAlphabet
    blocks: tuple = ()


def is_cluster(block):
    return not isinstance(block, Step)


def is_terminal(block):
    return is_cluster(block) and block.terminal


@functools.lru_cache(maxsize=None)
def witness_body(beta, up=1, down=0):
    """
    Cuerpo canónico de rango beta en [0, 1): un pulso para 1, un cúmulo de
    testigos de rango gamma para gamma + 1 con gamma sucesor, y una rampa para
    gamma + 1 con gamma límite.
    """
    if beta == ONE:
        return (Step(Fraction(0), up), Step(HALF, down))
    if not ord_is_successor(beta):
        raise OrdinalError(f'Solo hay testigos de rango sucesor >= 1, no de {beta}')
    gamma = predecessor(beta)
    if ord_is_successor(gamma):
        return (LimitCluster(HALF, HALF, HALF, witness_body(gamma, up, down), down),)
    return (RampCluster(HALF, HALF, HALF, gamma, down, up=up, down=down),)


def slot_start(cluster, k):
    return cluster.limit - cluster.offset * cluster.ratio ** k


def slot_index(cluster, t):
    """Índice de la copia cuyo hueco contiene t (slot_start(0) <= t < limit)"""
    k = 0
    width = cluster.offset * cluster.ratio
    while cluster.limit - width <= t:
        width *= cluster.ratio
        k += 1
    return k


def cluster_body(cluster, k):
    if isinstance(cluster, RampCluster):
        beta = fundamental_seq(cluster.gamma, k + cluster.skip)
        return witness_body(beta, cluster.up, cluster.down)
    return cluster.body


def body_final(cluster):
    if isinstance(cluster, RampCluster):
        return cluster.down
    return final_label(cluster.body, None)


def transform_block(block, shift, scale):
    if isinstance(block, Step):
        return Step(shift + scale * block.pos, block.label)
    return replace(block, limit=shift + scale * block.limit, offset=scale * block.offset)


def transform_blocks(blocks, shift, scale):
    return tuple(transform_block(block, shift, scale) for block in blocks)


def copy_blocks(cluster, k):
    """Bloques absolutos de la copia k"""
    scale = cluster.offset * cluster.ratio ** k * (1 - cluster.ratio)
    return transform_blocks(cluster_body(cluster, k), slot_start(cluster, k), scale)


def tail_cluster(cluster, k):
    """El mismo cúmulo empezando en su copia k"""
    tail = replace(cluster, offset=cluster.offset * cluster.ratio ** k)
    if isinstance(cluster, RampCluster):
        tail = replace(tail, skip=cluster.skip + k)
    return tail


def unfold_first(cluster):
    """Copia 0 explícita seguida del resto del cúmulo"""
    return copy_blocks(cluster, 0) + (tail_cluster(cluster, 1),)


def block_start(block):
    if isinstance(block, Step):
        return block.pos
    scale = cluster_scale(block)
    return slot_start(block, 0) + scale * block_start(cluster_body(block, 0)[0])


def cluster_scale(cluster):
    return cluster.offset * (1 - cluster.ratio)


def block_end(block):
    return block.pos if isinstance(block, Step) else block.limit


def first_label(block):
    if isinstance(block, Step):
        return block.label
    if isinstance(block, RampCluster):
        return block.up
    return first_label(block.body[0])


def final_label(blocks, entry):
    """Valor vigente tras el último bloque; None si acaba en un cúmulo terminal"""
    if not blocks:
        return entry
    return blocks[-1].label


def value_at(blocks, entry, t):
    current = entry
    for block in blocks:
        if t < block_start(block):
            return current
        if isinstance(block, Step) or t >= block.limit:
            current = block.label
            continue
        k = slot_index(block, t)
        copy_entry = current if k == 0 else body_final(block)
        return value_at(copy_blocks(block, k), copy_entry, t)
    return current


def relabel_block(block, mapping):
    def image(label):
        return None if label is None else mapping.get(label, label)

    if isinstance(block, Step):
        return Step(block.pos, image(block.label))
    if isinstance(block, RampCluster):
        return replace(block, label=image(block.label), up=image(block.up), down=image(block.down))
    return replace(block, label=image(block.label), body=relabel_blocks(block.body, mapping))


def relabel_blocks(blocks, mapping):
    return tuple(relabel_block(block, mapping) for block in blocks)


def validate_element(element):
    """
    Valida la estructura: orden estricto, cierres disjuntos, cotas, razones,
    etiquetas del alfabeto y cúmulos terminales solo al final.
    """
    _validate_blocks(element.blocks, element.alphabet, None, element.rho, top_level=True)


def _validate_blocks(blocks, alphabet, lower, upper, top_level):
    check_label = LabelValidator(alphabet)
    check_ratio = RatioValidator()
    previous_end = None
    for index, block in enumerate(blocks):
        if isinstance(block, Step):
            check_label(block.label)
            if block.pos >= upper:
                raise ValidationError(
                    'Salto en %(pos)s fuera del dominio (debe ser < %(upper)s)',
                    code='jump_beyond_rho',
                    params={'pos': block.pos, 'upper': upper},
                )
        else:
            _validate_cluster(block, alphabet, check_label, check_ratio)
            last = index == len(blocks) - 1
            if block.terminal:
                if not (top_level and last and block.limit == upper):
                    raise ValidationError(
                        'Un cúmulo terminal debe ser el último y acumularse en rho',
                        code='terminal_not_last',
                    )
                if block.label is not None:
                    raise ValidationError(
                        'Un cúmulo terminal no lleva etiqueta en el límite',
                        code='terminal_with_label',
                    )
            else:
                check_label(block.label)
                if block.limit >= upper:
                    raise ValidationError(
                        'Límite de cúmulo en %(pos)s fuera del dominio (debe ser < %(upper)s)',
                        code='jump_beyond_rho',
                        params={'pos': block.limit, 'upper': upper},
                    )
        start = block_start(block)
        if lower is not None and start < lower:
            raise ValidationError(
                'Salto en %(pos)s por debajo de %(lower)s',
                code='jump_below_range',
                params={'pos': start, 'lower': lower},
            )
        if previous_end is not None and not previous_end < start:
            raise ValidationError(
                'Bloques solapados o desordenados en %(pos)s',
                code='overlapping_blocks',
                params={'pos': start},
            )
        previous_end = block_end(block)


def _validate_cluster(cluster, alphabet, check_label, check_ratio):
    validate_positive(cluster.offset, 'separación del cúmulo')
    check_ratio(cluster.ratio)
    if isinstance(cluster, RampCluster):
        if not ord_is_limit(cluster.gamma):
            raise ValidationError(
                'El gamma de una rampa debe ser límite: %(gamma)s',
                code='gamma_not_limit',
                params={'gamma': cluster.gamma},
            )
        check_label(cluster.up)
        check_label(cluster.down)
        if cluster.up == cluster.down or cluster.skip < 0:
            raise ValidationError(
                'Rampa con etiquetas up/down iguales o skip negativo',
                code='invalid_ramp',
            )
        return
    if not cluster.body:
        raise ValidationError('Cuerpo de cúmulo vacío', code='empty_body')
    _validate_blocks(cluster.body, alphabet, Fraction(0), Fraction(1), top_level=False)
    if first_label(cluster.body[0]) == final_label(cluster.body, None):
        raise ValidationError(
            'El cuerpo de un cúmulo debe empezar con una etiqueta distinta de la final',
            code='cluster_body_period',
        )


def normalize(element):
    """
    Forma normal: sin saltos nulos y sin cúmulos vacíos. Idempotente.
    """
    validate_element(element)
    return replace(element, blocks=normalize_blocks(element.blocks, 0))


def normalize_blocks(blocks, entry):
    out = []
    current = entry
    pending = list(blocks)
    while pending:
        block = pending.pop(0)
        if isinstance(block, Step):
            if block.label != current:
                out.append(block)
                current = block.label
            continue
        block = _normalize_cluster(block)
        if isinstance(block, Step):
            pending.insert(0, block)
            continue
        if first_label(block) == current:
            pending[0:0] = unfold_first(block)
            continue
        out.append(block)
        current = block.label
    return tuple(out)


def _normalize_cluster(cluster):
    if isinstance(cluster, RampCluster):
        return cluster
    body = normalize_blocks(cluster.body, body_final(cluster))
    if not body:
        return Step(cluster.limit, cluster.label)
    return replace(cluster, body=body)


def make_element(rho, blocks, alphabet):
    return normalize(Element(rho=Fraction(rho), alphabet=alphabet, blocks=tuple(blocks)))


def const_ray(length, alphabet):
    """El punto c_l de la recta L_0"""
    return Element(rho=Fraction(length), alphabet=alphabet)


def tau(element):
    """Posición del primer salto; rho si no hay saltos"""
    if not element.blocks:
        return element.rho
    return block_start(element.blocks[0])


def final_value(element):
    return final_label(element.blocks, 0)


def evaluate(element, t):
    """Valor del elemento en t < rho"""
    t = Fraction(t)
    if t >= element.rho:
        raise DomainError(f'Evaluación en {t} fuera del dominio (rho = {element.rho})')
    return value_at(element.blocks, 0, t)


def prefix(element, s):
    """La restricción a (-inf, s)"""
    s = Fraction(s)
    if s > element.rho:
        raise DomainError(f'Prefijo en {s} más allá de rho = {element.rho}')
    if s == element.rho:
        return element
    return normalize(replace(element, rho=s, blocks=blocks_before(element.blocks, s)))


def blocks_before(blocks, s):
    """Bloques con los saltos en posiciones < s; un límite en s queda terminal"""
    out = []
    for block in blocks:
        if block_start(block) >= s:
            break
        if isinstance(block, Step) or block.limit < s:
            out.append(block)
            continue
        if block.limit == s:
            out.append(replace(block, label=None, terminal=True))
            break
        k = 0
        while slot_start(block, k) < s:
            pieces = copy_blocks(block, k)
            if slot_start(block, k + 1) <= s:
                out.extend(pieces)
            else:
                out.extend(blocks_before(pieces, s))
                break
            k += 1
        break
    return tuple(out)


def blocks_after(blocks, s):
    """Bloques con los saltos en posiciones > s"""
    out = []
    for block in blocks:
        if isinstance(block, Step):
            if block.pos > s:
                out.append(block)
            continue
        if block.limit <= s:
            continue
        if block_start(block) > s:
            out.append(block)
            continue
        k = slot_index(block, s)
        out.extend(blocks_after(copy_blocks(block, k), s))
        out.append(tail_cluster(block, k + 1))
    return tuple(out)


def tail_blocks(element, s):
    """Bloques de [s, rho) encabezados por un salto explícito en s"""
    s = Fraction(s)
    if s >= element.rho:
        return ()
    return (Step(s, evaluate(element, s)),) + blocks_after(element.blocks, s)


def lead_with_step(blocks):
    """Desdobla cúmulos iniciales hasta que el primer bloque sea un Step"""
    blocks = tuple(blocks)
    while blocks and is_cluster(blocks[0]):
        blocks = unfold_first(blocks[0]) + blocks[1:]
    return blocks


def splice(head, tail, rho):
    """
    Concatena head (dominio (-inf, head.rho)) con bloques absolutos en
    [head.rho, rho). Si head acaba en un cúmulo terminal, el valor en su
    límite lo fija el primer salto de tail.
    """
    blocks = list(head.blocks)
    tail = tuple(tail)
    if Fraction(rho) == head.rho and not tail:
        return head
    if blocks and is_terminal(blocks[-1]):
        tail = lead_with_step(tail)
        if not tail or tail[0].pos != head.rho:
            raise DomainError('Un cúmulo terminal necesita un salto en su límite para continuar')
        blocks[-1] = replace(blocks[-1], label=tail[0].label, terminal=False)
        tail = tail[1:]
    return make_element(rho, blocks + list(tail), head.alphabet)


def extend_step(element, label, length):
    """g = f en (-inf, rho_f) y g = label en [rho_f, rho_f + length)"""
    LabelValidator(element.alphabet)(label)
    length = Fraction(length)
    validate_positive(length)
    return splice(element, (Step(element.rho, label),), element.rho + length)


def shift_element(element, r):
    r = Fraction(r)
    return replace(element, rho=element.rho + r, blocks=transform_blocks(element.blocks, r, 1))


def relabel_element(element, mapping):
    return normalize(replace(element, blocks=relabel_blocks(element.blocks, mapping)))
