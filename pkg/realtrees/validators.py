"""
Validadores reutilizables para la gramática de elementos y la configuración
"""
from fractions import Fraction

from django.core.exceptions import ValidationError
from django.utils.deconstruct import deconstructible
from sympy.combinatorics import Permutation


@deconstructible
class RatioValidator:
    """
    Valida que la razón de un cúmulo esté en el intervalo abierto (0, 1)
    """

    def __call__(self, ratio):
        if not 0 < ratio < 1:
            raise ValidationError(
                'La razón de un cúmulo debe estar en (0, 1). Valor actual: %(ratio)s',
                code='invalid_ratio',
                params={'ratio': ratio},
            )


@deconstructible
class LabelValidator:
    """
    Valida que una etiqueta pertenezca al alfabeto
    """

    def __init__(self, alphabet):
        self.alphabet = alphabet

    def __call__(self, label):
        if label not in self.alphabet:
            raise ValidationError(
                'Etiqueta %(label)s fuera del alfabeto (%(alphabet)s)',
                code='label_outside_alphabet',
                params={'label': label, 'alphabet': self.alphabet},
            )

    def __eq__(self, other):
        return isinstance(other, LabelValidator) and self.alphabet == other.alphabet


def validate_rational(value):
    """
    Convierte texto 'p/q' o un entero a Fraction exacta
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    text = str(value).strip()
    try:
        if '.' in text or 'e' in text.lower():
            raise ValueError(text)
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ValidationError(
            'Racional mal formado: %(value)s (se espera p/q exacto)',
            code='invalid_rational',
            params={'value': value},
        )


def validate_positive(value, what='longitud'):
    if value <= 0:
        raise ValidationError(
            'La %(what)s debe ser positiva. Valor actual: %(value)s',
            code='not_positive',
            params={'what': what, 'value': value},
        )


def label_permutation(mapping, support=None):
    """
    Permutation de sympy sobre el soporte ordenado de una aplicación de
    etiquetas. Las etiquetas del soporte sin imagen quedan fijas.
    """
    if support is None:
        support = sorted(set(mapping) | set(mapping.values()))
    position = {label: index for index, label in enumerate(support)}
    return support, Permutation([position[mapping.get(label, label)] for label in support])


def validate_permutation(mapping, alphabet, fix_zero=False):
    """
    Valida una permutación de soporte finito del alfabeto y la devuelve como
    (soporte, Permutation).
    """
    label = LabelValidator(alphabet)
    for source, target in mapping.items():
        label(source)
        label(target)
    try:
        support, permutation = label_permutation(mapping)
    except ValueError:
        raise ValidationError(
            'La aplicación %(mapping)s no es una permutación',
            code='not_a_permutation',
            params={'mapping': dict(mapping)},
        ) from None
    if fix_zero and mapping.get(0, 0) != 0:
        raise ValidationError(
            'El reetiquetado debe fijar la etiqueta 0',
            code='zero_not_fixed',
        )
    return support, permutation


def validate_cap(value):
    if not isinstance(value, int) or value < 1:
        raise ValidationError(
            'El tope de desdoblamiento debe ser un entero >= 1. Valor actual: %(value)s',
            code='invalid_cap',
            params={'value': value},
        )
