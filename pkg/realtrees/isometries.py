"""
Isometrías explícitas de T_kappa como árboles de expresiones componibles.

Cada nodo sabe aplicarse a un elemento de forma exacta y sabe invertirse.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction

from .elements import (
    const_ray,
    evaluate,
    prefix,
    relabel_blocks,
    relabel_element,
    shift_element,
    splice,
    tail_blocks,
    tau,
)
from .exceptions import DomainError
from .metric import branch_point, check_alphabets, dist, leq
from .validators import label_permutation, validate_permutation

logger = logging.getLogger(__name__)


def _mapping(pairs):
    return dict(pairs)


def _pairs(support, permutation):
    """Pares (etiqueta, imagen) movidos, ordenados por etiqueta"""
    return tuple(
        (support[index], support[image])
        for index, image in enumerate(permutation.array_form)
        if index != image
    )


def _inverse_pairs(pairs):
    support, permutation = label_permutation(_mapping(pairs))
    return _pairs(support, ~permutation)


def _compose_pairs(first, then):
    """Pares de la permutación que aplica first y después then"""
    support = sorted({label for pair in first + then for label in pair})
    _, left = label_permutation(_mapping(first), support)
    _, right = label_permutation(_mapping(then), support)
    return _pairs(support, left * right)


class Isometry:
    def apply(self, element, cap=None):
        raise NotImplementedError

    def inverse(self):
        raise NotImplementedError


@dataclass(frozen=True)
class Identity(Isometry):
    def apply(self, element, cap=None):
        return element

    def inverse(self):
        return self


@dataclass(frozen=True)
class Translate(Isometry):
    """Desplaza rho y todos los saltos en r; sobre L_0 es una traslación"""

    r: Fraction

    def apply(self, element, cap=None):
        return shift_element(element, self.r)

    def inverse(self):
        return Translate(-self.r)


@dataclass(frozen=True)
class Reflect(Isometry):
    """
    El valor en t es a(t + 2 tau_a) y rho pasa a rho_a - 2 tau_a.
    Sobre L_0 es la reflexión c_r -> c_{-r}.
    """

    def apply(self, element, cap=None):
        return shift_element(element, -2 * tau(element))

    def inverse(self):
        return self


@dataclass(frozen=True)
class BranchSwap(Isometry):
    """
    Involución que intercambia a con c_{rho_a} y fija el rayo bajo tau_a.

    Para b que sigue a (o a c_{rho_a}) más allá de tau_a hasta la altura h,
    reescribe b en [tau_a, h) con los valores de la otra rama y aplica a la
    cola la transposición (a(h) 0) cuando h < rho_a.
    """

    a: object

    def apply(self, element, cap=None):
        a = self.a
        check_alphabets(a, element)
        start = tau(a)
        if start == a.rho:
            return element
        along_a = branch_point(element, a, cap)
        along_line = min(tau(element), a.rho)
        if along_a <= start and along_line <= start:
            return element
        if along_a > start:
            height = along_a
            head = const_ray(height, element.alphabet)
        else:
            height = along_line
            head = prefix(a, height)
        if height == element.rho:
            return head
        mapping = {}
        if height < a.rho:
            label = evaluate(a, height)
            if label != 0:
                mapping = {label: 0, 0: label}
        tail = relabel_blocks(tail_blocks(element, height), mapping)
        return splice(head, tail, element.rho)

    def inverse(self):
        return self


@dataclass(frozen=True)
class DirPerm(Isometry):
    """
    Fija x y todo lo que no está estrictamente por encima de x; por encima
    aplica sigma a los valores en [rho_x, rho_g). Permuta las direcciones
    Up en x y fija Down.
    """

    x: object
    sigma: tuple

    def apply(self, element, cap=None):
        check_alphabets(self.x, element)
        if element.rho <= self.x.rho or not leq(self.x, element, cap):
            return element
        head = prefix(element, self.x.rho)
        tail = relabel_blocks(tail_blocks(element, self.x.rho), _mapping(self.sigma))
        return splice(head, tail, element.rho)

    def inverse(self):
        return DirPerm(self.x, _inverse_pairs(self.sigma))


@dataclass(frozen=True)
class Relabel(Isometry):
    """Permutación global de etiquetas que fija 0"""

    sigma: tuple

    def apply(self, element, cap=None):
        return relabel_element(element, _mapping(self.sigma))

    def inverse(self):
        return Relabel(_inverse_pairs(self.sigma))

    def after(self, other):
        """self ∘ other como un único reetiquetado"""
        return Relabel(_compose_pairs(other.sigma, self.sigma))


@dataclass(frozen=True)
class Compose(Isometry):
    """Composición aplicada de derecha a izquierda"""

    items: tuple = ()

    def apply(self, element, cap=None):
        for item in reversed(self.items):
            element = item.apply(element, cap)
        return element

    def inverse(self):
        return Compose(tuple(item.inverse() for item in reversed(self.items)))


def apply(phi, element, cap=None):
    return phi.apply(element, cap)


def translate(r):
    return Translate(Fraction(r))


def reflect():
    return Reflect()


def branch_swap(a):
    return BranchSwap(a)


def dir_perm(x, sigma):
    support, permutation = validate_permutation(dict(sigma), x.alphabet)
    return DirPerm(x, _pairs(support, permutation))


def relabel(sigma, alphabet):
    support, permutation = validate_permutation(dict(sigma), alphabet, fix_zero=True)
    return Relabel(_pairs(support, permutation))


def compose(items):
    """Composición; los reetiquetados consecutivos se funden en uno"""
    merged = []
    for item in items:
        if merged and isinstance(item, Relabel) and isinstance(merged[-1], Relabel):
            merged[-1] = merged[-1].after(item)
        else:
            merged.append(item)
    if not merged:
        return Identity()
    return Compose(tuple(merged))


def invert(phi):
    return phi.inverse()


def _to_origin(first, second, cap):
    """Isometría que lleva first a c_0 y second a c_r con r = d(first, second)"""
    steps = [BranchSwap(first), Translate(-first.rho)]
    image = Compose(tuple(reversed(steps))).apply(second, cap)
    if tau(image) < 0:
        steps.append(Reflect())
        image = Reflect().apply(image)
    steps.append(BranchSwap(image))
    return Compose(tuple(reversed(steps)))


def two_point_map(a1, a2, b1, b2, cap=None):
    """Isometría psi con psi(a1) = b1 y psi(a2) = b2"""
    check_alphabets(a1, a2, b1, b2)
    left, right = dist(a1, a2, cap), dist(b1, b2, cap)
    if left != right:
        raise DomainError(f'Distancias distintas: {left} frente a {right}')
    phi = _to_origin(a1, a2, cap)
    psi = _to_origin(b1, b2, cap)
    logger.debug('two_point_map: distancia común %s', left)
    return Compose((psi.inverse(), phi))


def line_action(phi, alphabet, cap=None):
    """
    Acción inducida sobre L_0 como par (signo, desplazamiento) de t -> s*t + c,
    o None si phi no estabiliza L_0 en los puntos de prueba.
    """
    images = [phi.apply(const_ray(t, alphabet), cap) for t in (0, 1, -1)]
    if any(image.blocks for image in images):
        return None
    shift = images[0].rho
    sign = images[1].rho - shift
    if sign not in (1, -1) or images[2].rho != shift - sign:
        return None
    return int(sign), shift

