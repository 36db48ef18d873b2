import random
from fractions import Fraction

from django.core.exceptions import ValidationError
from django.test import SimpleTestCase

from realtrees.cbrank import complexity, member
from realtrees.elements import LabelAlphabet, Step, extend_step, make_element, prefix
from realtrees.exceptions import DomainError
from realtrees.generators import label_pool, random_element, random_permutation, random_rational, random_relative
from realtrees.isometries import (
    Compose,
    Identity,
    Reflect,
    Relabel,
    Translate,
    branch_swap,
    compose,
    dir_perm,
    invert,
    line_action,
    relabel,
    translate,
    two_point_map,
)
from realtrees.metric import dist
from realtrees.ordinals import ONE, ord_max

from .samples import ALPHABET, e1, e2, e3, ray

FOUR = LabelAlphabet.finite(4)


class LineIsometryTest(SimpleTestCase):
    """
    Tests unitarios para traslaciones y reflexiones
    """

    def test_translate(self):
        """Test de que trasladar mueve rho y los saltos"""
        image = translate(2).apply(e1())
        self.assertEqual(image, make_element(3, [Step(Fraction(2), 1)], ALPHABET))
        self.assertEqual(Translate(Fraction(2)).inverse().apply(image), e1())

    def test_reflect(self):
        """Test de que la reflexión fija E1 y lleva c_r a c_-r"""
        self.assertEqual(Reflect().apply(e1()), e1())
        self.assertEqual(Reflect().apply(ray(Fraction(5, 2))), ray(Fraction(-5, 2)))
        self.assertEqual(Reflect().apply(Reflect().apply(e3())), e3())

    def test_line_action(self):
        """Test de la acción inducida sobre L_0"""
        self.assertEqual(line_action(Translate(Fraction(2)), ALPHABET), (1, 2))
        self.assertEqual(line_action(Reflect(), ALPHABET), (-1, 0))
        self.assertEqual(line_action(Compose((Translate(Fraction(3)), Reflect())), ALPHABET), (-1, 3))

    def test_line_action_outside_line(self):
        """Test de una isometría que saca c_0 de L_0"""
        self.assertIsNone(line_action(branch_swap(make_element(2, [Step(Fraction(-1), 1)], ALPHABET)), ALPHABET))


class BranchSwapTest(SimpleTestCase):
    """
    Tests unitarios para el intercambio de ramas
    """

    def test_swaps_a_and_line(self):
        """Test de que branch_swap(E1) intercambia E1 y c_1 y fija c_-1"""
        phi = branch_swap(e1())
        self.assertEqual(phi.apply(e1()), ray(1))
        self.assertEqual(phi.apply(ray(1)), e1())
        self.assertEqual(phi.apply(ray(-1)), ray(-1))

    def test_moves_points_above_a(self):
        """Test de la imagen de un punto que sigue a E1"""
        above = extend_step(e1(), 2, 1)
        image = branch_swap(e1()).apply(above)
        self.assertEqual(image, make_element(2, [Step(Fraction(1), 2)], ALPHABET))
        self.assertEqual(dist(image, ray(1)), dist(above, e1()))

    def test_moves_points_on_line(self):
        """Test de la imagen de un punto de L_0 por encima de tau_a"""
        image = branch_swap(e1()).apply(ray(2))
        self.assertEqual(image, make_element(2, [Step(Fraction(0), 1), Step(Fraction(1), 0)], ALPHABET))
        self.assertEqual(dist(image, ray(1)), dist(ray(2), e1()))
        self.assertEqual(branch_swap(e1()).apply(image), ray(2))

    def test_involution(self):
        """Test de que aplicar dos veces es la identidad"""
        phi = branch_swap(e3())
        for x in (e1(), e2(), e3(), ray(3), extend_step(e1(), 2, 1)):
            self.assertEqual(phi.apply(phi.apply(x)), x)


class PermutationTest(SimpleTestCase):
    """
    Tests unitarios para reetiquetados y permutaciones de direcciones
    """

    def test_relabel(self):
        """Test de que intercambiar 1 y 2 lleva E1 a E2"""
        phi = relabel({1: 2, 2: 1}, ALPHABET)
        self.assertEqual(phi.apply(e1()), e2())
        self.assertEqual(phi.inverse().apply(e2()), e1())

    def test_dir_perm(self):
        """Test de que dir_perm en c_0 permuta las ramas por encima y fija el resto"""
        phi = dir_perm(ray(0), {1: 2, 2: 1})
        self.assertEqual(phi.apply(e1()), e2())
        self.assertEqual(phi.apply(ray(-1)), ray(-1))
        self.assertEqual(phi.apply(ray(2)), ray(2))

    def test_not_a_permutation(self):
        """Test de error con una aplicación no biyectiva"""
        with self.assertRaises(ValidationError) as cm:
            dir_perm(ray(0), {1: 2})
        self.assertEqual(cm.exception.code, 'not_a_permutation')

    def test_repeated_image(self):
        """Test de error cuando dos etiquetas tienen la misma imagen"""
        with self.assertRaises(ValidationError) as cm:
            relabel({1: 2, 2: 2}, ALPHABET)
        self.assertEqual(cm.exception.code, 'not_a_permutation')

    def test_fixed_points_are_dropped(self):
        """Test de que sigma solo guarda las etiquetas movidas"""
        self.assertEqual(relabel({0: 0, 1: 1, 2: 2}, ALPHABET).sigma, ())
        self.assertEqual(dir_perm(ray(0), {0: 0, 1: 2, 2: 1}).sigma, ((1, 2), (2, 1)))

    def test_inverse_of_cycle(self):
        """Test de la inversa de un 3-ciclo"""
        phi = relabel({1: 2, 2: 3, 3: 1}, FOUR)
        self.assertEqual(phi.inverse().sigma, ((1, 3), (2, 1), (3, 2)))
        self.assertEqual(phi.inverse().apply(phi.apply(e1(FOUR))), e1(FOUR))

    def test_compose_merges_relabels(self):
        """Test de que dos reetiquetados consecutivos se funden en uno"""
        cycle = relabel({1: 2, 2: 3, 3: 1}, FOUR)
        swap = relabel({1: 2, 2: 1}, FOUR)
        phi = compose([cycle, swap])
        self.assertEqual(phi, Compose((Relabel(((1, 3), (3, 1))),)))
        self.assertEqual(phi.apply(e1(FOUR)), cycle.apply(swap.apply(e1(FOUR))))
        self.assertEqual(compose([swap, swap]).apply(e2(FOUR)), e2(FOUR))

    def test_random_permutation(self):
        """Test de permutaciones aleatorias reproducibles con y sin 0 fijo"""
        pool = label_pool(FOUR)
        for seed in range(20):
            mapping = random_permutation(random.Random(seed), pool)
            self.assertEqual(sorted(mapping), sorted(mapping.values()))
            self.assertEqual(mapping, random_permutation(random.Random(seed), pool))
            fixed = random_permutation(random.Random(seed), pool, fix_zero=True)
            self.assertEqual(fixed[0], 0)
            relabel(fixed, FOUR)


class CompositionTest(SimpleTestCase):
    """
    Tests unitarios para composición, inversa y aplicaciones de dos puntos
    """

    def test_compose_and_invert(self):
        """Test de que la inversa deshace la composición"""
        phi = compose([branch_swap(e1()), translate(Fraction(-3, 2)), Reflect(), relabel({1: 2, 2: 1}, ALPHABET)])
        for x in (e1(), e2(), e3(), ray(Fraction(1, 3))):
            self.assertEqual(invert(phi).apply(phi.apply(x)), x)

    def test_empty_composition(self):
        """Test de la composición vacía"""
        self.assertEqual(compose([]), Identity())

    def test_preserves_distances(self):
        """Test de que una composición conserva las distancias"""
        phi = compose([dir_perm(ray(0), {1: 2, 2: 1}), branch_swap(e3()), translate(5)])
        points = [e1(), e2(), e3(), ray(-2), extend_step(e1(), 2, 1)]
        for f in points:
            for g in points:
                self.assertEqual(dist(phi.apply(f), phi.apply(g)), dist(f, g))

    def test_two_point_map(self):
        """Test de una isometría que lleva (E1, E2) a (c_0, c_2)"""
        psi = two_point_map(e1(), e2(), ray(0), ray(2))
        self.assertEqual(psi.apply(e1()), ray(0))
        self.assertEqual(psi.apply(e2()), ray(2))

    def test_two_point_map_on_line(self):
        """Test de reflexión más traslación sobre L_0"""
        psi = two_point_map(ray(0), ray(2), ray(5), ray(3))
        self.assertEqual(psi.apply(ray(0)), ray(5))
        self.assertEqual(psi.apply(ray(2)), ray(3))
        self.assertEqual(line_action(psi, ALPHABET), (-1, 5))

    def test_two_point_map_between_clusters(self):
        """Test de dos puntos con cúmulos"""
        psi = two_point_map(e3(), e1(), ray(0), ray(4))
        self.assertEqual(psi.apply(e3()), ray(0))
        self.assertEqual(psi.apply(e1()), ray(4))

    def test_two_point_map_needs_equal_distances(self):
        """Test de error con distancias distintas"""
        with self.assertRaises(DomainError):
            two_point_map(e1(), e2(), ray(0), ray(1))


class ComplexityPreservationTest(SimpleTestCase):
    """
    Tests unitarios para la complejidad de las imágenes por cada constructor
    """

    def test_line_maps_and_relabel(self):
        """Test de que traslación, reflexión y reetiquetado conservan la complejidad"""
        rng = random.Random(35)
        for _ in range(40):
            f = random_element(rng, ALPHABET)
            for phi in (translate(random_rational(rng)), Reflect(), relabel({1: 2, 2: 1}, ALPHABET)):
                self.assertEqual(complexity(phi.apply(f)), complexity(f))

    def test_dir_perm(self):
        """Test de que dir_perm solo puede cambiar el salto en rho_x"""
        rng = random.Random(36)
        for _ in range(40):
            f = random_element(rng, ALPHABET)
            x = prefix(f, f.rho - Fraction(rng.randint(1, 16), 8))
            image = dir_perm(x, {0: 1, 1: 2, 2: 0}).apply(f)
            self.assertEqual(ord_max(complexity(image), ONE), ord_max(complexity(f), ONE))

    def test_branch_swap_stays_in_level(self):
        """Test de que branch_swap(a) lleva T^[alpha] en sí mismo si a está en T^[alpha]"""
        rng = random.Random(37)
        for _ in range(40):
            f = random_element(rng, ALPHABET)
            a = random_relative(rng, f)
            level = ord_max(complexity(f), complexity(a), ONE)
            self.assertTrue(member(branch_swap(a).apply(f), level))
