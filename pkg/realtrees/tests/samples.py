"""
Elementos de ejemplo compartidos por los tests
"""
from fractions import Fraction

from realtrees.elements import LabelAlphabet, LimitCluster, Step, const_ray, make_element

ALPHABET = LabelAlphabet.finite(3)
PULSE = (Step(Fraction(0), 1), Step(Fraction(1, 2), 0))

E1_TEXT = '(alphabet finite 3)\n(elem :rho 1 :jumps [(step 0 1)])'
E2_TEXT = '(alphabet finite 3)\n(elem :rho 1 :jumps [(step 0 2)])'
E3_TEXT = (
    '(alphabet finite 3)\n'
    '(elem :rho 1 :jumps [(lim :at 0 :off 1 :ratio 1/2 :body [(step 0 1) (step 1/2 0)] :label 1)])'
)


def ray(length, alphabet=ALPHABET):
    return const_ray(Fraction(length), alphabet)


def e1(alphabet=ALPHABET):
    return make_element(1, [Step(Fraction(0), 1)], alphabet)


def e2(alphabet=ALPHABET):
    return make_element(1, [Step(Fraction(0), 2)], alphabet)


def e3(alphabet=ALPHABET):
    return make_element(1, [LimitCluster(Fraction(0), Fraction(1), Fraction(1, 2), PULSE, 1)], alphabet)
