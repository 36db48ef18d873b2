"""
Aritmética ordinal en forma normal de Cantor.

Un ordinal es una lista finita de términos (exponente, coeficiente) con
exponentes estrictamente decrecientes. Los exponentes son a su vez ordinales
(forma normal hereditaria), lo que cubre todo lo que está por debajo de
epsilon_0. Los rangos que producen las construcciones quedan por debajo de
w^w; los exponentes no finitos aparecen en los tipos de orden.
"""
import enum
import functools
from dataclasses import dataclass

from django.core.exceptions import ValidationError

from .exceptions import OrdinalError


class Cmp(enum.Enum):
    LT = -1
    EQ = 0
    GT = 1


@functools.total_ordering
@dataclass(frozen=True)
class Ordinal:
    """Ordinal en forma normal de Cantor; la lista vacía es 0"""

    terms: tuple = ()

    def __post_init__(self):
        previous = None
        for exponent, coefficient in self.terms:
            if not isinstance(exponent, Ordinal) or not isinstance(coefficient, int):
                raise OrdinalError('Término mal formado en forma normal de Cantor')
            if coefficient < 1:
                raise OrdinalError('Los coeficientes deben ser >= 1')
            if previous is not None and ord_cmp(previous, exponent) is not Cmp.GT:
                raise OrdinalError('Los exponentes deben decrecer estrictamente')
            previous = exponent

    @classmethod
    def finite(cls, n):
        if n < 0:
            raise OrdinalError(f'Un ordinal finito no puede ser negativo: {n}')
        return cls(((ZERO, n),)) if n else ZERO

    @classmethod
    def omega_power(cls, exponent, coefficient=1):
        return cls(((exponent, coefficient),))

    @property
    def is_zero(self):
        return not self.terms

    @property
    def is_finite(self):
        return self.is_zero or (len(self.terms) == 1 and self.terms[0][0].is_zero)

    def as_int(self):
        if not self.is_finite:
            raise OrdinalError(f'{self} no es finito')
        return self.terms[0][1] if self.terms else 0

    @property
    def leading_exponent(self):
        if self.is_zero:
            raise OrdinalError('0 no tiene exponente principal')
        return self.terms[0][0]

    def __lt__(self, other):
        if not isinstance(other, Ordinal):
            return NotImplemented
        return ord_cmp(self, other) is Cmp.LT

    def __add__(self, other):
        if not isinstance(other, Ordinal):
            return NotImplemented
        return ord_add(self, other)

    def __str__(self):
        if self.is_zero:
            return '0'
        return ' + '.join(_term_str(e, c) for e, c in self.terms)

    def compact(self):
        """Forma sin espacios usada dentro de los ficheros de elementos"""
        return str(self).replace(' ', '')


ZERO = Ordinal()
ONE = Ordinal(((ZERO, 1),))
OMEGA = Ordinal(((ONE, 1),))


def _term_str(exponent, coefficient):
    if exponent.is_zero:
        return str(coefficient)
    if exponent == ONE:
        base = 'w'
    elif exponent.is_finite:
        base = f'w^{exponent.as_int()}'
    else:
        base = f'w^({exponent})'
    return base if coefficient == 1 else f'{base}*{coefficient}'


def ord_cmp(a, b):
    """Comparación lexicográfica de las listas de términos"""
    for (ea, ca), (eb, cb) in zip(a.terms, b.terms):
        order = ord_cmp(ea, eb)
        if order is not Cmp.EQ:
            return order
        if ca != cb:
            return Cmp.LT if ca < cb else Cmp.GT
    if len(a.terms) == len(b.terms):
        return Cmp.EQ
    return Cmp.LT if len(a.terms) < len(b.terms) else Cmp.GT


def ord_add(a, b):
    """Suma ordinal (no conmutativa): b absorbe los términos menores de a"""
    if b.is_zero:
        return a
    lead, lead_coefficient = b.terms[0]
    kept = []
    for exponent, coefficient in a.terms:
        order = ord_cmp(exponent, lead)
        if order is Cmp.GT:
            kept.append((exponent, coefficient))
        elif order is Cmp.EQ:
            lead_coefficient += coefficient
            break
        else:
            break
    return Ordinal(tuple(kept) + ((lead, lead_coefficient),) + b.terms[1:])


def ord_max(*values):
    return max(values, default=ZERO)


def ord_succ(a):
    return ord_add(a, ONE)


def ord_is_successor(a):
    return bool(a.terms) and a.terms[-1][0].is_zero


def ord_is_limit(a):
    return bool(a.terms) and not ord_is_successor(a)


def predecessor(a):
    if not ord_is_successor(a):
        raise OrdinalError(f'{a} no es un sucesor')
    exponent, coefficient = a.terms[-1]
    if coefficient == 1:
        return Ordinal(a.terms[:-1])
    return Ordinal(a.terms[:-1] + ((exponent, coefficient - 1),))


def one_plus_inverse(a):
    """El único x con 1 + x = a (a >= 1): a - 1 si a es finito, a si no"""
    if a.is_zero:
        raise OrdinalError('0 no es de la forma 1 + x')
    return predecessor(a) if a.is_finite else a


def fundamental_seq(g, n):
    """
    n-ésimo término de la sucesión fundamental canónica de un ordinal límite.

    Con g = d + w^e*m: d + w^e*(m-1) + X + 1, donde X = w^(e-1)*n si e es
    sucesor y X = w^fundamental_seq(e, n) si e es límite. Todos los términos
    son sucesores y crecen estrictamente con supremo g.
    """
    if not ord_is_limit(g):
        raise OrdinalError(f'{g} no es un ordinal límite')
    if n < 0:
        raise OrdinalError(f'Índice negativo en sucesión fundamental: {n}')
    exponent, coefficient = g.terms[-1]
    base = Ordinal(g.terms[:-1])
    if coefficient > 1:
        base = ord_add(base, Ordinal.omega_power(exponent, coefficient - 1))
    if ord_is_successor(exponent):
        step = Ordinal.omega_power(predecessor(exponent), n) if n else ZERO
    else:
        step = Ordinal.omega_power(fundamental_seq(exponent, n))
    return ord_succ(ord_add(base, step))


def parse_ordinal(text):
    """
    Lee un ordinal en sintaxis de texto: 'w^2*3 + w*1 + 4', 'w^(w+1)', '0'.
    """
    source = ''.join(str(text).split())
    if source.startswith('"') and source.endswith('"') and len(source) >= 2:
        source = source[1:-1]
    parser = _OrdinalParser(source)
    try:
        value = parser.parse_sum()
        if parser.position != len(source):
            parser.fail()
    except OrdinalError as exc:
        raise ValidationError(
            'Ordinal mal formado: %(text)s (%(reason)s)',
            code='invalid_ordinal',
            params={'text': text, 'reason': exc},
        )
    return value


class _OrdinalParser:
    def __init__(self, source):
        self.source = source
        self.position = 0

    def fail(self):
        raise OrdinalError(f'carácter inesperado en la posición {self.position + 1}')

    def peek(self):
        return self.source[self.position] if self.position < len(self.source) else ''

    def take(self, char):
        if self.peek() == char:
            self.position += 1
            return True
        return False

    def number(self):
        start = self.position
        while self.peek().isdigit():
            self.position += 1
        if start == self.position:
            self.fail()
        return int(self.source[start:self.position])

    def parse_sum(self):
        value = self.parse_term()
        while self.take('+'):
            value = ord_add(value, self.parse_term())
        return value

    def parse_term(self):
        if not self.take('w'):
            return Ordinal.finite(self.number())
        exponent = self.parse_atom() if self.take('^') else ONE
        coefficient = self.number() if self.take('*') else 1
        return Ordinal.omega_power(exponent, coefficient) if coefficient else ZERO

    def parse_atom(self):
        if self.take('('):
            value = self.parse_sum()
            if not self.take(')'):
                self.fail()
            return value
        if self.take('w'):
            return OMEGA
        return Ordinal.finite(self.number())
