"""
Baterías de propiedades con aritmética exacta.

Cada batería recibe un generador aleatorio con semilla fija y devuelve un
SuiteResult con el número de casos y la lista de fallos. UNDECIDED cuenta
como fallo.
"""
import logging
import random
from contextlib import contextmanager
from dataclasses import dataclass, field
from fractions import Fraction

from django.conf import settings

from .cbrank import (
    cb_rank,
    complexity,
    derivative,
    jump_set,
    member,
    pair_complexity,
    rank_from_order_type,
    restrict_set,
    witness,
)
from .construct import (
    BetaSequence,
    escape_sequence,
    incompleteness_demo,
    limit_of_chain,
)
from .elements import (
    LabelAlphabet,
    const_ray,
    evaluate,
    extend_step,
    lead_with_step,
    make_element,
    prefix,
    tau,
)
from .exceptions import UndecidedError
from .generators import (
    ISOMETRY_KINDS,
    label_pool,
    random_constructor,
    random_element,
    random_isometry,
    random_relative,
)
from .isometries import Reflect, branch_swap, two_point_map
from .metric import (
    branch_point,
    classify_direction,
    dist,
    enumerate_directions,
    leq,
    same_point,
    wedge,
)
from .ordinals import OMEGA, ONE, Ordinal, ord_max, ord_succ, parse_ordinal
from .serializers import serialize

logger = logging.getLogger(__name__)

ORACLE_WITNESSES = ('1', '2', '3', '4', 'w + 1', 'w + 2', 'w*2 + 1')
TWO_POINT_PROBES = 20
IDENTITY_SAMPLES = 16


@dataclass
class SuiteContext:
    alphabet: LabelAlphabet
    cap: int = None
    alpha: Ordinal = None


@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures

    @contextmanager
    def case(self, description):
        self.cases += 1
        try:
            yield
        except UndecidedError as exc:
            self.failures.append(f'{description}: {exc}')

    def expect(self, condition, message):
        if not condition:
            self.failures.append(message)


def _partner(rng, base):
    """Con probabilidad 1/2 un pariente de base, si no un elemento libre"""
    if rng.random() < 0.5:
        return random_relative(rng, base)
    return random_element(rng, base.alphabet)


def _same_function(rng, f, g, cap):
    """
    Igualdad por evaluación: mismo rho y mismos valores en el punto de
    ramificación y en puntos al azar por debajo de rho.
    """
    if f.rho != g.rho:
        return False
    lowest = min(tau(f), tau(g)) - 1
    points = {branch_point(f, g, cap)}
    for _ in range(IDENTITY_SAMPLES):
        points.add(lowest + (f.rho - lowest) * Fraction(rng.randint(0, 63), 64))
    return all(evaluate(f, t) == evaluate(g, t) for t in points if t < f.rho)


def metric_suite(rng, cases, context):
    result = SuiteResult('metric')
    cap = context.cap
    for index in range(cases):
        f = random_element(rng, context.alphabet)
        g = _partner(rng, f)
        h = _partner(rng, g)
        with result.case(index):
            fg, gh, fh = dist(f, g, cap), dist(g, h, cap), dist(f, h, cap)
            result.expect(dist(f, f, cap) == 0, f'd(f, f) != 0 para {serialize(f)}')
            result.expect(fg == dist(g, f, cap), f'asimetría en el caso {index}')
            result.expect(fg >= 0, f'distancia negativa en el caso {index}')
            result.expect(
                (fg == 0) == _same_function(rng, f, g, cap),
                f'd = 0 no equivale a la igualdad en el caso {index}',
            )
            result.expect(fh <= fg + gh, f'desigualdad triangular en el caso {index}')
            unfolded = make_element(f.rho, lead_with_step(f.blocks), f.alphabet)
            result.expect(
                dist(f, unfolded, cap) == 0 and _same_function(rng, f, unfolded, cap),
                f'f y su forma desdoblada no coinciden en el caso {index}',
            )
    return result


def fourpoint_suite(rng, cases, context):
    result = SuiteResult('fourpoint')
    cap = context.cap
    for index in range(cases):
        points = [random_element(rng, context.alphabet)]
        for _ in range(3):
            points.append(_partner(rng, rng.choice(points)))
        a, b, c, d = points
        with result.case(index):
            sums = sorted([
                dist(a, b, cap) + dist(c, d, cap),
                dist(a, c, cap) + dist(b, d, cap),
                dist(a, d, cap) + dist(b, c, cap),
            ])
            result.expect(sums[1] == sums[2], f'condición de cuatro puntos en el caso {index}: {sums}')
    return result


def glb_suite(rng, cases, context):
    result = SuiteResult('glb')
    cap = context.cap
    for index in range(cases):
        f = random_element(rng, context.alphabet)
        g = _partner(rng, f)
        with result.case(index):
            meet = wedge(f, g, cap)
            if rng.random() < 0.5:
                h = prefix(meet, meet.rho - Fraction(rng.randint(0, 16), 8))
            else:
                h = _partner(rng, f)
            result.expect(leq(meet, f, cap) and leq(meet, g, cap), f'f ∧ g no es cota inferior en el caso {index}')
            if leq(h, f, cap) and leq(h, g, cap):
                result.expect(leq(h, meet, cap), f'f ∧ g no es la mayor cota inferior en el caso {index}')
    return result


def _matched_pair(rng, b1, distance):
    """b2 con d(b1, b2) = distance"""
    if distance == 0:
        return b1
    down = rng.choice([Fraction(0), distance / 2, distance])
    base = prefix(b1, b1.rho - down)
    if down == distance:
        return base
    taken = evaluate(b1, base.rho) if down else None
    label = rng.choice([label for label in label_pool(b1.alphabet) if label != taken])
    return extend_step(base, label, distance - down)


def _check_complexity(result, kind, phi, f, image, where):
    """
    Translate, Reflect y Relabel conservan la complejidad; DirPerm solo puede
    cambiar el salto en rho_x; BranchSwap(a) deja la imagen en T^[alpha]
    cuando f y a están en T^[alpha].
    """
    before, after = complexity(f), complexity(image)
    if kind in ('translate', 'reflect', 'relabel'):
        result.expect(after == before, f'{where}: complejidad {after}, se esperaba {before}')
    elif kind == 'dir-perm':
        result.expect(
            ord_max(after, ONE) == ord_max(before, ONE),
            f'{where}: complejidad {after} frente a {before}',
        )
    else:
        level = ord_max(before, complexity(phi.a), ONE)
        result.expect(member(image, level), f'{where}: la imagen sale de T^[{level}]')


def _constructor_pass(result, rng, cases, context):
    """Cada tipo de constructor por separado: distancias y complejidad"""
    cap = context.cap
    for kind in ISOMETRY_KINDS:
        for index in range(max(1, cases // 5)):
            phi = random_constructor(rng, context.alphabet, kind)
            f = random_element(rng, context.alphabet)
            g = _partner(rng, f)
            where = f'{kind} {index}'
            with result.case(where):
                image_f = phi.apply(f, cap)
                result.expect(
                    dist(image_f, phi.apply(g, cap), cap) == dist(f, g, cap),
                    f'{where}: no conserva la distancia',
                )
                _check_complexity(result, kind, phi, f, image_f, where)


def isometry_suite(rng, cases, context):
    result = SuiteResult('isometry')
    cap = context.cap
    alphabet = context.alphabet
    for index in range(cases):
        phi = random_isometry(rng, alphabet)
        f = random_element(rng, alphabet)
        g = _partner(rng, f)
        with result.case(index):
            image_f, image_g = phi.apply(f, cap), phi.apply(g, cap)
            result.expect(
                dist(image_f, image_g, cap) == dist(f, g, cap),
                f'la isometría no conserva la distancia en el caso {index}',
            )
            result.expect(
                same_point(phi.inverse().apply(image_f, cap), f, cap),
                f'la inversa no deshace la isometría en el caso {index}',
            )
            swap = branch_swap(g)
            twice = swap.apply(swap.apply(f, cap), cap)
            result.expect(same_point(twice, f, cap), f'branch_swap no es involución en el caso {index}')
            result.expect(
                same_point(swap.apply(g, cap), const_ray(g.rho, alphabet), cap),
                f'branch_swap(a)(a) != c_rho en el caso {index}',
            )
            mirrored = Reflect().apply(Reflect().apply(f))
            result.expect(same_point(mirrored, f, cap), f'reflect no es involución en el caso {index}')

    _constructor_pass(result, rng, cases, context)

    for index in range(max(1, cases // 10)):
        a1 = random_element(rng, alphabet)
        a2 = _partner(rng, a1)
        b1 = random_element(rng, alphabet)
        with result.case(f'two-point {index}'):
            b2 = _matched_pair(rng, b1, dist(a1, a2, cap))
            psi = two_point_map(a1, a2, b1, b2, cap)
            result.expect(same_point(psi.apply(a1, cap), b1, cap), f'psi(a1) != b1 en el caso two-point {index}')
            result.expect(same_point(psi.apply(a2, cap), b2, cap), f'psi(a2) != b2 en el caso two-point {index}')
            probes = [random_relative(rng, rng.choice((a1, a2))) for _ in range(TWO_POINT_PROBES)]
            for probe in probes:
                result.expect(
                    dist(psi.apply(probe, cap), b1, cap) == dist(probe, a1, cap),
                    f'psi no conserva distancias en el caso two-point {index}',
                )
    return result


def _check_rank(result, points, what):
    rank = cb_rank(points)
    oracle = rank_from_order_type(points)
    result.expect(rank == oracle, f'{what}: cb_rank {rank} frente a oráculo {oracle}')
    if not points.is_empty:
        derived = cb_rank(derivative(points))
        expected = Ordinal.finite(rank.as_int() - 1) if rank.is_finite else rank
        result.expect(derived == expected, f'{what}: rango de la derivada {derived}, se esperaba {expected}')


def rank_oracle_suite(rng, cases, context):
    result = SuiteResult('rank-oracle')
    cap = context.cap
    for text in ORACLE_WITNESSES:
        alpha = parse_ordinal(text)
        with result.case(f'witness {text}'):
            points = jump_set(witness(alpha, 0, 1, context.alphabet))
            _check_rank(result, points, f'witness({text})')
            result.expect(cb_rank(points) == alpha, f'witness({text}) tiene rango {cb_rank(points)}')
    for index in range(cases):
        g = random_element(rng, context.alphabet)
        with result.case(index):
            _check_rank(result, jump_set(g), f'caso {index}')
            f = prefix(g, g.rho - Fraction(rng.randint(1, 32), 8))
            restricted = restrict_set(jump_set(g), f.rho, g.rho)
            _check_rank(result, restricted, f'restricción del caso {index}')
            result.expect(
                pair_complexity(f, g, cap) == cb_rank(restricted),
                f'pair_complexity no usa la restricción en el caso {index}',
            )
    return result


def limit_suite(rng, cases, context):
    result = SuiteResult('limit')
    cap = context.cap
    alphabet = context.alphabet
    starts = {'c_0': const_ray(0, alphabet), 'witness(3)': witness(Ordinal.finite(3), 0, 1, alphabet)}
    bases = [ONE, Ordinal.finite(2), Ordinal.finite(3), OMEGA]
    for (name, x), base in ((item, base) for item in starts.items() for base in bases):
        with result.case(f'{name}, beta {base}'):
            beta_seq = BetaSequence(base)
            limit = limit_of_chain(x, beta_seq, 1)
            expected = ord_succ(base)
            result.expect(
                pair_complexity(x, limit, cap) == expected,
                f'comp(x, límite) != {expected} para {name}, beta {base}',
            )
            result.expect(
                complexity(limit) == ord_max(complexity(x), expected),
                f'comp(límite) != max(comp(x), {expected}) para {name}, beta {base}',
            )
            chain = escape_sequence(x, beta_seq, 1, 12)
            for n, element in enumerate(chain, start=1):
                result.expect(
                    leq(element, limit, cap) and dist(element, limit, cap) == Fraction(1, 2 ** (n - 1)),
                    f'd(a_{n}, límite) != 1/2^{n - 1} para {name}, beta {base}',
                )
    return result


def escape_suite(rng, cases, context):
    result = SuiteResult('escape')
    escape = getattr(settings, 'RTREE_ESCAPE', {})
    steps = escape.get('STEPS', 10)
    radius = Fraction(escape.get('RADIUS', '1'))
    alphas = [context.alpha] if context.alpha is not None else [ONE, Ordinal.finite(2), OMEGA]
    for alpha in alphas:
        for kappa in (3, 4):
            with result.case(f'alpha {alpha}, kappa {kappa}'):
                report = incompleteness_demo(alpha, LabelAlphabet.for_kappa(kappa), steps, radius, context.cap)
                for failure in report.failures:
                    result.failures.append(f'alpha {alpha}, kappa {kappa}: {failure}')
    return result


def directions_suite(rng, cases, context):
    result = SuiteResult('directions')
    cap = context.cap
    for kappa in (3, 4, 7):
        alphabet = LabelAlphabet.for_kappa(kappa)
        for alpha in (1, 2):
            level = Ordinal.finite(alpha)
            for index in range(cases):
                x = random_element(rng, alphabet, depth=alpha - 1, ramps=False)
                with result.case(f'kappa {kappa}, alpha {alpha}, caso {index}'):
                    where = f'kappa {kappa}, alpha {alpha}, caso {index}'
                    result.expect(member(x, level), f'{where}: x fuera de T^[{alpha}]')
                    found = enumerate_directions(x)
                    result.expect(len(found) == kappa, f'{where}: {len(found)} direcciones')
                    seen = set()
                    for direction, representative in found:
                        seen.add(classify_direction(x, representative, cap))
                        result.expect(
                            classify_direction(x, representative, cap) == direction,
                            f'{where}: representante mal clasificado ({direction})',
                        )
                        result.expect(member(representative, level), f'{where}: representante fuera de T^[{alpha}]')
                    result.expect(len(seen) == kappa, f'{where}: clasificaciones repetidas')
    return result


SUITES = {
    'metric': metric_suite,
    'fourpoint': fourpoint_suite,
    'glb': glb_suite,
    'isometry': isometry_suite,
    'rank-oracle': rank_oracle_suite,
    'limit': limit_suite,
    'escape': escape_suite,
    'directions': directions_suite,
}


def default_cases(name):
    return getattr(settings, 'RTREE_SUITE_CASES', {}).get(name, 100)


def run_suite(name, cases=None, seed=None, alphabet=None, cap=None, alpha=None):
    """Ejecuta una batería por nombre; el resultado es determinista dada la semilla"""
    suite = SUITES[name]
    cases = default_cases(name) if cases is None else cases
    seed = getattr(settings, 'RTREE_DEFAULT_SEED', 1) if seed is None else seed
    context = SuiteContext(alphabet or LabelAlphabet.finite(2), cap, alpha)
    logger.info('Batería %s: %s casos, semilla %s', name, cases, seed)
    result = suite(random.Random(seed), cases, context)
    logger.info('Batería %s: %s casos, %s fallos', name, result.cases, len(result.failures))
    return result
