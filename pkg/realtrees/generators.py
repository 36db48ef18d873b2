"""
Generadores aleatorios reproducibles para las baterías de propiedades.

Posiciones en [-8, 8] con denominador 8, Steps y cúmulos de profundidad <= 2.
"""
from fractions import Fraction

from sympy.combinatorics import Permutation

from .elements import (
    LimitCluster,
    RampCluster,
    Step,
    extend_step,
    final_value,
    make_element,
    prefix,
    splice,
    tau,
)
from .isometries import Reflect, branch_swap, compose, dir_perm, relabel, translate
from .ordinals import OMEGA, Ordinal

RATIOS = (Fraction(1, 2), Fraction(1, 3), Fraction(2, 3))


def label_pool(alphabet):
    return list(alphabet.labels()) if alphabet.is_finite else list(range(4))


def random_rational(rng, lo=-8, hi=8, denominator=8):
    return Fraction(rng.randint(lo * denominator, hi * denominator), denominator)


def _walk(rng, pool, count, avoid=None):
    """Etiquetas consecutivas distintas, la primera distinta de la última y de avoid"""
    if len(pool) < 3:
        count = 2
    labels = [rng.choice([label for label in pool if label != avoid])]
    while len(labels) < count:
        banned = {labels[-1]}
        if len(labels) == count - 1:
            banned.add(labels[0])
        labels.append(rng.choice([label for label in pool if label not in banned]))
    return labels


def random_body(rng, pool, depth=0, avoid=None):
    """Cuerpo de cúmulo en [0, 1)"""
    count = rng.randint(2, 3)
    labels = _walk(rng, pool, count, avoid)
    eighths = [0] + sorted(rng.sample(range(1, 8), len(labels) - 1))
    blocks = [Step(Fraction(p, 8), label) for p, label in zip(eighths, labels)]
    if depth and rng.random() < 0.4:
        limit = Fraction(3 * eighths[1], 32)
        inner = random_body(rng, pool, depth - 1, avoid=labels[-1])
        blocks[0] = LimitCluster(limit, limit, rng.choice(RATIOS), tuple(inner), labels[0])
    return tuple(blocks)


def random_element(rng, alphabet, depth=2, max_blocks=3, ramps=None):
    """
    Elemento aleatorio normalizado. Con depth 0 solo hay Steps (complejidad
    <= 1); con depth 1 cúmulos de pulsos (<= 2).
    """
    pool = label_pool(alphabet)
    ramps = depth >= 2 if ramps is None else ramps
    rho = random_rational(rng)
    cuts = sorted({random_rational(rng) for _ in range(rng.randint(0, max_blocks))})
    cuts = [cut for cut in cuts if cut < rho]
    blocks = []
    current = 0
    for start, end in zip(cuts, cuts[1:] + [rho]):
        if depth and rng.random() < 0.35:
            terminal = end == rho and rng.random() < 0.5
            limit = end if terminal else start + 3 * (end - start) / 4
            label = None if terminal else rng.choice(pool)
            if ramps and rng.random() < 0.25:
                up, down = _walk(rng, pool, 2, avoid=current)
                blocks.append(RampCluster(
                    limit, limit - start, Fraction(1, 2), OMEGA, label, terminal, up=up, down=down,
                ))
            else:
                body = random_body(rng, pool, depth - 1, avoid=current)
                blocks.append(LimitCluster(
                    limit, limit - start, rng.choice(RATIOS), body, label, terminal,
                ))
            current = label
        else:
            current = rng.choice([label for label in pool if label != current])
            blocks.append(Step(start, current))
    return make_element(rho, blocks, alphabet)


def random_relative(rng, base, depth=1):
    """
    Elemento que comparte un prefijo con base: corta base en una altura
    aleatoria y continúa con saltos o un cúmulo nuevos.
    """
    pool = label_pool(base.alphabet)
    height = base.rho - Fraction(rng.randint(0, 32), 8)
    element = prefix(base, max(height, tau(base) - 1))
    for _ in range(rng.randint(0, 2)):
        element = extend_step(element, rng.choice(pool), Fraction(rng.randint(1, 16), 8))
    if depth and rng.random() < 0.3:
        start = element.rho
        length = Fraction(rng.randint(1, 16), 8)
        body = random_body(rng, pool, depth - 1, avoid=final_value(element))
        cluster = LimitCluster(start + length, length, rng.choice(RATIOS), body, terminal=True)
        element = splice(element, (cluster,), start + length)
    return element


def random_permutation(rng, pool, fix_zero=False):
    """Permutation de sympy barajada con rng sobre el pool, como diccionario"""
    moved = [label for label in pool if not (fix_zero and label == 0)]
    array_form = list(range(len(moved)))
    rng.shuffle(array_form)
    permutation = Permutation(array_form)
    mapping = {moved[index]: moved[image] for index, image in enumerate(permutation.array_form)}
    if fix_zero:
        mapping[0] = 0
    return mapping


ISOMETRY_KINDS = ('translate', 'reflect', 'branch-swap', 'dir-perm', 'relabel')


def random_constructor(rng, alphabet, kind):
    """Un único constructor de isometría del tipo indicado"""
    pool = label_pool(alphabet)
    if kind == 'translate':
        return translate(random_rational(rng, -4, 4))
    if kind == 'reflect':
        return Reflect()
    if kind == 'branch-swap':
        return branch_swap(random_element(rng, alphabet, depth=1))
    if kind == 'dir-perm':
        return dir_perm(random_element(rng, alphabet, depth=1), random_permutation(rng, pool))
    return relabel(random_permutation(rng, pool, fix_zero=True), alphabet)


def random_isometry(rng, alphabet, length=None):
    """Composición aleatoria de hasta 4 constructores"""
    count = rng.randint(1, 4) if length is None else length
    return compose([random_constructor(rng, alphabet, rng.choice(ISOMETRY_KINDS)) for _ in range(count)])


def random_ordinal(rng, depth=2, terms=3):
    """Ordinal en forma normal con coeficientes <= 3 y exponentes de profundidad < depth"""
    if not depth:
        return Ordinal.finite(rng.randint(0, 4))
    exponents = {random_ordinal(rng, depth - 1, terms) for _ in range(rng.randint(0, terms))}
    return Ordinal(tuple((exponent, rng.randint(1, 3)) for exponent in sorted(exponents, reverse=True)))
