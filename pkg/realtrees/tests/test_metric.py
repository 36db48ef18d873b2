import random
from dataclasses import replace
from fractions import Fraction

from django.test import SimpleTestCase, override_settings

from realtrees.cbrank import witness
from realtrees.elements import LabelAlphabet, LimitCluster, Step, make_element, prefix
from realtrees.exceptions import AlphabetMismatchError, DomainError, UndecidedError
from realtrees.generators import random_element, random_relative
from realtrees.metric import (
    DOWN,
    Direction,
    branch_point,
    classify_direction,
    dist,
    enumerate_directions,
    leq,
    point_on_segment,
    same_point,
    unfold_cap,
    wedge,
)
from realtrees.ordinals import parse_ordinal

from .samples import ALPHABET, e1, e2, e3, ray


def two_period():
    """E3 escrito con dos pulsos por copia y razón 1/4"""
    body = (
        Step(Fraction(0), 1),
        Step(Fraction(1, 3), 0),
        Step(Fraction(2, 3), 1),
        Step(Fraction(5, 6), 0),
    )
    return make_element(1, [LimitCluster(Fraction(0), Fraction(1), Fraction(1, 4), body, 1)], ALPHABET)


class WedgeTest(SimpleTestCase):
    """
    Tests unitarios para el ínfimo y la distancia
    """

    def test_wedge_of_distinct_labels(self):
        """Test de E1 ∧ E2 = c_0"""
        self.assertEqual(wedge(e1(), e2()), ray(0))

    def test_wedge_with_cluster(self):
        """Test de E1 ∧ E3 = c_-1"""
        self.assertEqual(wedge(e1(), e3()), ray(-1))

    def test_distances(self):
        """Test de las distancias de los ejemplos"""
        self.assertEqual(dist(e1(), e2()), 2)
        self.assertEqual(dist(e1(), e3()), 4)
        self.assertEqual(dist(ray(0), ray(Fraction(7, 2))), Fraction(7, 2))
        self.assertEqual(dist(e3(), e3()), 0)

    def test_cluster_against_its_unfolding(self):
        """Test de que un cúmulo y su forma parcialmente desdoblada coinciden"""
        unfolded = prefix(e3(), Fraction(-1, 4))
        self.assertEqual(branch_point(unfolded, e3()), Fraction(-1, 4))

    def test_clusters_with_same_limit(self):
        """Test de cúmulos con el mismo límite y periodos distintos que describen el mismo punto"""
        self.assertEqual(branch_point(e3(), two_period()), 1)
        self.assertTrue(same_point(e3(), two_period()))

    def test_clusters_with_same_limit_and_other_label(self):
        """Test de cúmulos que coinciden hasta el límite y difieren en él"""
        other = replace(two_period().blocks[0], label=2)
        self.assertEqual(branch_point(e3(), make_element(1, [other], ALPHABET)), 0)

    def test_alphabet_mismatch(self):
        """Test de error con alfabetos distintos"""
        with self.assertRaises(AlphabetMismatchError):
            dist(ray(0), ray(0, LabelAlphabet.finite(4)))

    def test_cap(self):
        """Test del tope de eventos"""
        with self.assertRaises(UndecidedError):
            branch_point(e3(), two_period(), cap=2)

    @override_settings(RTREE_UNFOLD_CAP=7)
    def test_cap_from_settings(self):
        """Test del tope leído de la configuración"""
        self.assertEqual(unfold_cap(), 7)
        self.assertEqual(unfold_cap(3), 3)


class RampWedgeTest(SimpleTestCase):
    """
    Tests unitarios para el ínfimo entre rampas con el mismo límite
    """

    def ramp(self, alpha='w + 1'):
        return witness(parse_ordinal(alpha), 0, 1, ALPHABET)

    def test_ramp_against_its_prefix(self):
        """Test de que una rampa y su prefijo en el límite coinciden hasta el límite"""
        g = self.ramp()
        f = prefix(g, 0)
        self.assertTrue(leq(f, g))
        self.assertEqual(dist(f, g), 1)
        self.assertEqual(wedge(f, g), f)

    def test_ramp_against_partial_prefix(self):
        """Test de una rampa frente a un prefijo cortado dentro de una copia"""
        g = self.ramp()
        f = prefix(g, Fraction(-1, 8))
        self.assertTrue(leq(f, g))
        self.assertEqual(branch_point(f, g), Fraction(-1, 8))

    def test_ramps_with_other_gamma(self):
        """Test de rampas con el mismo límite y gammas distintas"""
        self.assertEqual(branch_point(self.ramp(), self.ramp('w*2 + 1')), Fraction(-15, 16))
        self.assertEqual(dist(self.ramp(), self.ramp('w*2 + 1')), Fraction(31, 8))

    def test_ramp_against_same_point_other_label(self):
        """Test de rampas que coinciden hasta el límite y difieren en él"""
        g = self.ramp()
        other = make_element(1, [replace(g.blocks[0], label=2)], ALPHABET)
        self.assertEqual(branch_point(g, other), 0)
        self.assertEqual(dist(g, other), 2)


class OrderTest(SimpleTestCase):
    """
    Tests unitarios para el orden de prefijos
    """

    def test_leq(self):
        """Test de f ⪯ g en los ejemplos"""
        self.assertTrue(leq(ray(-1), e1()))
        self.assertFalse(leq(e1(), e2()))
        self.assertTrue(leq(prefix(e3(), Fraction(-1, 4)), e3()))
        self.assertFalse(leq(ray(0), e3()))

    def test_point_on_segment(self):
        """Test de puntos sobre la geodésica [E1, E2]"""
        self.assertEqual(point_on_segment(e1(), e2(), 0), e1())
        self.assertEqual(point_on_segment(e1(), e2(), 1), ray(0))
        self.assertEqual(point_on_segment(e1(), e2(), 2), e2())
        self.assertEqual(dist(point_on_segment(e1(), e2(), Fraction(3, 2)), e2()), Fraction(1, 2))
        with self.assertRaises(DomainError):
            point_on_segment(e1(), e2(), 3)

    def test_point_on_segment_is_isometric(self):
        """Test de d(point(t), point(u)) = |t - u| sobre pares aleatorios"""
        rng = random.Random(34)
        for _ in range(40):
            f = random_element(rng, ALPHABET)
            g = random_relative(rng, f) if rng.random() < 0.5 else random_element(rng, ALPHABET)
            length = dist(f, g)
            t, u = (length * Fraction(rng.randint(0, 64), 64) for _ in range(2))
            self.assertEqual(dist(point_on_segment(f, g, t), point_on_segment(f, g, u)), abs(t - u))
            self.assertEqual(dist(f, point_on_segment(f, g, t)), t)


class DirectionTest(SimpleTestCase):
    """
    Tests unitarios para las direcciones en un punto
    """

    def test_classify(self):
        """Test de la clasificación de direcciones en c_0"""
        self.assertEqual(classify_direction(ray(0), e1()), Direction.up(1))
        self.assertEqual(classify_direction(ray(0), e2()), Direction.up(2))
        self.assertEqual(classify_direction(ray(0), ray(-1)), DOWN)
        self.assertEqual(classify_direction(ray(0), e3()), DOWN)
        self.assertEqual(str(Direction.up(2)), 'up 2')

    def test_classify_same_point(self):
        """Test de error si el punto de prueba es x"""
        with self.assertRaises(DomainError):
            classify_direction(e1(), e1())

    def test_valence(self):
        """Test de que hay kappa direcciones distintas"""
        for x in (ray(0), e1(), e3(), prefix(e3(), 0)):
            found = enumerate_directions(x)
            self.assertEqual(len(found), 4)
            kinds = {classify_direction(x, representative) for _, representative in found}
            self.assertEqual(kinds, {direction for direction, _ in found})
            self.assertEqual(len(kinds), 4)

    def test_countable_alphabet_is_not_enumerable(self):
        """Test de error al enumerar con alfabeto numerable"""
        with self.assertRaises(DomainError):
            enumerate_directions(ray(0, LabelAlphabet.countable()))
