"""
Sucesiones de escape de Cauchy y su límite simbólico.

Una cadena a_1 ≺ a_2 ≺ ... con d(a_n, a_{n+1}) = r/2^n dentro de T^[alpha]
cuyo límite tiene complejidad alpha + 1: certifica que T^[alpha] no es
completo.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction

from .cbrank import (
    cb_rank,
    complexity,
    jump_set,
    member,
    pair_complexity,
    rank_from_order_type,
    restrict_set,
)
from .elements import (
    LimitCluster,
    RampCluster,
    Step,
    const_ray,
    extend_step,
    final_value,
    splice,
    transform_blocks,
    witness_body,
)
from .exceptions import DomainError, OrdinalError
from .metric import dist, leq
from .ordinals import ONE, fundamental_seq, ord_is_successor, ord_succ
from .serializers import format_rational, serialize
from .validators import validate_positive

logger = logging.getLogger(__name__)

ALTERNATING_BODY = (Step(Fraction(0), 1), Step(Fraction(2, 3), 0))


@dataclass(frozen=True)
class BetaSequence:
    """
    Sucesión beta_n: constante si base es sucesor, la sucesión fundamental
    de base si es límite.
    """

    base: object

    def __post_init__(self):
        if self.base.is_zero:
            raise OrdinalError('La sucesión beta necesita base >= 1')

    @property
    def is_constant(self):
        return ord_is_successor(self.base)

    def __call__(self, n):
        return self.base if self.is_constant else fundamental_seq(self.base, n)


def _escape_labels(element):
    """Etiquetas (up, down) del testigo: up distinto del valor final"""
    up = 0 if final_value(element) == 1 else 1
    return up, 1 - up


def escape_step(element, beta, r):
    """
    Devuelve a con element ≺ a, rho_a = rho + r y comp(element, a) = beta.
    """
    if beta.is_zero or not ord_is_successor(beta):
        raise OrdinalError(f'escape_step necesita beta sucesor >= 1, no {beta}')
    r = Fraction(r)
    validate_positive(r, 'radio')
    if beta == ONE:
        label = 1 if final_value(element) == 0 else 0
        return extend_step(element, label, r)
    up, down = _escape_labels(element)
    blocks = transform_blocks(witness_body(beta, up, down), element.rho, r)
    return splice(element, blocks, element.rho + r)


def escape_sequence(element, beta_seq, r, steps):
    """a_1 = element, a_{n+1} = escape_step(a_n, beta_n, r/2^n)"""
    if steps < 1:
        raise DomainError('La cadena necesita al menos un elemento')
    r = Fraction(r)
    chain = [element]
    for n in range(1, steps):
        chain.append(escape_step(chain[-1], beta_seq(n), r / 2 ** n))
    return chain


def limit_of_chain(element, beta_seq, r):
    """
    Límite simbólico de escape_sequence: un cúmulo terminal que se acumula en
    rho + r (LimitCluster para beta constante, RampCluster para un supremo
    límite).
    """
    r = Fraction(r)
    validate_positive(r, 'radio')
    limit = element.rho + r
    base = beta_seq.base
    quarter, half = Fraction(1, 4), Fraction(1, 2)
    if base == ONE:
        if final_value(element) == 0:
            tail = (LimitCluster(limit, r, quarter, ALTERNATING_BODY, terminal=True),)
        else:
            tail = (
                Step(element.rho, 0),
                LimitCluster(limit, r / 2, quarter, ALTERNATING_BODY, terminal=True),
            )
        return splice(element, tail, limit)
    up, down = _escape_labels(element)
    if beta_seq.is_constant:
        cluster = LimitCluster(limit, r, half, witness_body(base, up, down), terminal=True)
    else:
        cluster = RampCluster(limit, r, half, base, terminal=True, skip=1, up=up, down=down)
    return splice(element, (cluster,), limit)


@dataclass
class EscapeReport:
    alpha: object
    alphabet: object
    radius: Fraction
    sequence: list
    step_distances: list
    partial_sums: list
    limit: object
    tail_distance: Fraction
    limit_complexity: object
    pair_limit_complexity: object
    oracle_rank: object
    memberships: list
    limit_in_alpha: bool
    limit_in_successor: bool
    increasing: bool
    cauchy: bool
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures

    def to_json(self):
        return {
            'alpha': str(self.alpha),
            'kappa': str(self.alphabet.kappa),
            'alphabet': str(self.alphabet),
            'radius': format_rational(self.radius),
            'sequence': [serialize(element) for element in self.sequence],
            'step_distances': [format_rational(d) for d in self.step_distances],
            'partial_sums': [format_rational(s) for s in self.partial_sums],
            'limit': serialize(self.limit),
            'tail_distance': format_rational(self.tail_distance),
            'limit_complexity': str(self.limit_complexity),
            'pair_limit_complexity': str(self.pair_limit_complexity),
            'oracle_rank': str(self.oracle_rank),
            'memberships': self.memberships,
            'limit_in_alpha': self.limit_in_alpha,
            'limit_in_successor': self.limit_in_successor,
            'increasing': self.increasing,
            'cauchy': self.cauchy,
            'failures': self.failures,
        }


def incompleteness_demo(alpha, alphabet, steps, radius=1, cap=None):
    """
    Cadena de Cauchy dentro de T^[alpha] cuyo límite tiene complejidad
    alpha + 1 y por tanto no está en T^[alpha].
    """
    beta_seq = BetaSequence(alpha)
    radius = Fraction(radius)
    start = const_ray(0, alphabet)
    logger.info('Demo de incompletitud: alpha=%s, kappa=%s, pasos=%s', alpha, alphabet.kappa, steps)
    sequence = escape_sequence(start, beta_seq, radius, steps)
    limit = limit_of_chain(start, beta_seq, radius)

    step_distances = [dist(a, b, cap) for a, b in zip(sequence, sequence[1:])]
    partial_sums = []
    total = Fraction(0)
    for d in step_distances:
        total += d
        partial_sums.append(total)
    tail_distance = dist(sequence[-1], limit, cap)
    restricted = restrict_set(jump_set(limit), start.rho, limit.rho)

    report = EscapeReport(
        alpha=alpha,
        alphabet=alphabet,
        radius=radius,
        sequence=sequence,
        step_distances=step_distances,
        partial_sums=partial_sums,
        limit=limit,
        tail_distance=tail_distance,
        limit_complexity=complexity(limit),
        pair_limit_complexity=pair_complexity(start, limit, cap),
        oracle_rank=rank_from_order_type(restricted),
        memberships=[member(element, alpha) for element in sequence],
        limit_in_alpha=member(limit, alpha),
        limit_in_successor=member(limit, ord_succ(alpha)),
        increasing=all(
            a.rho < b.rho and leq(a, b, cap) for a, b in zip(sequence, sequence[1:])
        ) and leq(sequence[-1], limit, cap),
        cauchy=all(d <= radius / 2 ** n for n, d in enumerate(step_distances, start=1)),
    )
    _audit(report, restricted)
    return report


def _audit(report, restricted):
    expected = ord_succ(report.alpha)
    checks = [
        (report.increasing, 'la cadena no es estrictamente creciente'),
        (report.cauchy, 'una distancia supera r/2^n'),
        (not report.partial_sums or report.partial_sums[-1] <= report.radius,
         'la suma parcial supera r'),
        (report.tail_distance == report.radius / 2 ** (len(report.sequence) - 1),
         'd(a_N, límite) no es r/2^(N-1)'),
        (all(report.memberships), 'un elemento de la cadena no está en T^[alpha]'),
        (report.limit_complexity == expected, 'la complejidad del límite no es alpha + 1'),
        (report.pair_limit_complexity == expected, 'comp(a_1, límite) no es alpha + 1'),
        (cb_rank(restricted) == report.oracle_rank, 'rango y oráculo de tipo de orden discrepan'),
        (not report.limit_in_alpha, 'el límite pertenece a T^[alpha]'),
        (report.limit_in_successor, 'el límite no pertenece a T^[alpha + 1]'),
    ]
    report.failures = [message for ok, message in checks if not ok]
    if report.failures:
        logger.warning('Demo de incompletitud con fallos: %s', report.failures)


@dataclass
class TransportReport:
    images: list
    limit_image: object
    distances_preserved: bool
    tail_preserved: bool

    @property
    def ok(self):
        return self.distances_preserved and self.tail_preserved


def transport_report(report, phi, cap=None):
    """Empuja la cadena por una isometría psi: b_n = psi(a_n)"""
    images = [phi.apply(element, cap) for element in report.sequence]
    limit_image = phi.apply(report.limit, cap)
    distances = [dist(a, b, cap) for a, b in zip(images, images[1:])]
    return TransportReport(
        images=images,
        limit_image=limit_image,
        distances_preserved=distances == report.step_distances,
        tail_preserved=dist(images[-1], limit_image, cap) == report.tail_distance,
    )


@dataclass(frozen=True)
class Inclusion:
    """Inclusión identidad T^[source] -> T^[target]"""

    source: object
    target: object

    def apply(self, element):
        if not member(element, self.source):
            raise DomainError(f'El elemento no pertenece a T^[{self.source}]')
        return element

    def then(self, other):
        if other.source != self.target:
            raise DomainError('Las inclusiones no son componibles')
        return Inclusion(self.source, other.target)


def inclusion(alpha, beta):
    if beta < alpha:
        raise DomainError(f'No hay inclusión de T^[{alpha}] en T^[{beta}]')
    return Inclusion(alpha, beta)
