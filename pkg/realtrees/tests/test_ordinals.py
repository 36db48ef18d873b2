import random

from django.core.exceptions import ValidationError
from django.test import SimpleTestCase

from realtrees.exceptions import OrdinalError
from realtrees.generators import random_ordinal
from realtrees.ordinals import (
    OMEGA,
    ONE,
    ZERO,
    Cmp,
    Ordinal,
    fundamental_seq,
    one_plus_inverse,
    ord_add,
    ord_cmp,
    ord_is_limit,
    ord_is_successor,
    ord_succ,
    parse_ordinal,
    predecessor,
)


class OrdinalArithmeticTest(SimpleTestCase):
    """
    Tests unitarios para la aritmética en forma normal de Cantor
    """

    def test_addition_absorbs_smaller_terms(self):
        """Test de 1 + w = w y w + 1 > w"""
        self.assertEqual(ord_add(ONE, OMEGA), OMEGA)
        self.assertEqual(ord_add(OMEGA, ONE), parse_ordinal('w + 1'))
        self.assertEqual(ord_cmp(ord_add(OMEGA, ONE), OMEGA), Cmp.GT)

    def test_addition_merges_equal_exponents(self):
        """Test de w*2 + 3 + w^2 = w^2"""
        left = parse_ordinal('w*2 + 3')
        self.assertEqual(ord_add(left, parse_ordinal('w^2')), parse_ordinal('w^2'))
        self.assertEqual(ord_add(left, OMEGA), parse_ordinal('w*3'))

    def test_comparison_is_lexicographic(self):
        """Test del orden entre ordinales"""
        self.assertLess(Ordinal.finite(7), OMEGA)
        self.assertLess(parse_ordinal('w*2 + 5'), parse_ordinal('w^2'))
        self.assertLess(parse_ordinal('w^w'), parse_ordinal('w^w + 1'))
        self.assertEqual(ord_cmp(ZERO, ZERO), Cmp.EQ)

    def test_successor_and_limit(self):
        """Test de la clasificación sucesor / límite"""
        self.assertTrue(ord_is_successor(ord_succ(OMEGA)))
        self.assertTrue(ord_is_limit(parse_ordinal('w*2')))
        self.assertFalse(ord_is_successor(ZERO))
        self.assertFalse(ord_is_limit(ZERO))

    def test_predecessor(self):
        """Test del predecesor de un sucesor"""
        self.assertEqual(predecessor(parse_ordinal('w + 2')), parse_ordinal('w + 1'))
        with self.assertRaises(OrdinalError):
            predecessor(OMEGA)

    def test_one_plus_inverse(self):
        """Test de la única x con 1 + x = a"""
        self.assertEqual(one_plus_inverse(Ordinal.finite(3)), Ordinal.finite(2))
        self.assertEqual(one_plus_inverse(ord_succ(OMEGA)), ord_succ(OMEGA))

    def test_invalid_terms(self):
        """Test de términos que no están en forma normal"""
        with self.assertRaises(OrdinalError):
            Ordinal(((ZERO, 1), (ONE, 1)))
        with self.assertRaises(OrdinalError):
            Ordinal(((ONE, 0),))


class FundamentalSequenceTest(SimpleTestCase):
    """
    Tests unitarios para las sucesiones fundamentales
    """

    def test_omega(self):
        """Test de fundamental_seq(w, n) = n + 1"""
        self.assertEqual(fundamental_seq(OMEGA, 3), Ordinal.finite(4))
        self.assertEqual(fundamental_seq(OMEGA, 0), ONE)

    def test_omega_times_two(self):
        """Test de fundamental_seq(w*2, n) = w + n + 1"""
        self.assertEqual(fundamental_seq(parse_ordinal('w*2'), 2), parse_ordinal('w + 3'))

    def test_omega_squared(self):
        """Test de fundamental_seq(w^2, n) = w*n + 1"""
        self.assertEqual(fundamental_seq(parse_ordinal('w^2'), 2), parse_ordinal('w*2 + 1'))

    def test_limit_exponent(self):
        """Test de fundamental_seq(w^w, n) = w^(n+1) + 1"""
        self.assertEqual(fundamental_seq(parse_ordinal('w^w'), 1), parse_ordinal('w^2 + 1'))

    def test_strictly_increasing_below_limit(self):
        """Test de que la sucesión crece estrictamente por debajo del límite"""
        limit = parse_ordinal('w^2 + w')
        terms = [fundamental_seq(limit, n) for n in range(6)]
        for smaller, larger in zip(terms, terms[1:]):
            self.assertLess(smaller, larger)
        self.assertTrue(all(term < limit for term in terms))

    def test_successor_is_rejected(self):
        """Test de error con un ordinal sucesor"""
        with self.assertRaises(OrdinalError):
            fundamental_seq(Ordinal.finite(5), 1)
        with self.assertRaises(OrdinalError):
            fundamental_seq(OMEGA, -1)


class OrdinalSyntaxTest(SimpleTestCase):
    """
    Tests unitarios para la sintaxis textual de ordinales
    """

    def test_parse_and_print(self):
        """Test de lectura y escritura en forma normal"""
        value = parse_ordinal('w^2*3 + w*1 + 4')
        self.assertEqual(str(value), 'w^2*3 + w + 4')
        self.assertEqual(value.compact(), 'w^2*3+w+4')

    def test_zero(self):
        """Test del cero"""
        self.assertEqual(parse_ordinal('0'), ZERO)
        self.assertEqual(str(ZERO), '0')

    def test_nested_exponent(self):
        """Test de exponentes no finitos"""
        value = parse_ordinal('w^(w + 1)')
        self.assertEqual(str(value), 'w^(w + 1)')
        self.assertEqual(parse_ordinal('"w^(w+1)"'), value)

    def test_malformed(self):
        """Test de errores de sintaxis"""
        for text in ('w +', 'x', 'w^(2', ''):
            with self.assertRaises(ValidationError) as cm:
                parse_ordinal(text)
            self.assertEqual(cm.exception.code, 'invalid_ordinal')


class OrdinalPropertyTest(SimpleTestCase):
    """
    Tests unitarios para las leyes de la suma y de las sucesiones
    fundamentales sobre ordinales aleatorios
    """

    def random_triples(self, seed, count=300):
        rng = random.Random(seed)
        for _ in range(count):
            yield random_ordinal(rng), random_ordinal(rng), random_ordinal(rng)

    def test_addition_is_associative(self):
        """Test de (a + b) + c = a + (b + c)"""
        for a, b, c in self.random_triples(21):
            self.assertEqual(ord_add(ord_add(a, b), c), ord_add(a, ord_add(b, c)))

    def test_addition_is_monotone(self):
        """Test de que b < c implica a + b < a + c y b + a <= c + a"""
        for a, b, c in self.random_triples(22):
            if b == c:
                continue
            b, c = sorted((b, c))
            self.assertLess(ord_add(a, b), ord_add(a, c))
            self.assertLessEqual(ord_add(b, a), ord_add(c, a))

    def test_comparison_is_a_total_order(self):
        """Test de tricotomía y transitividad de ord_cmp"""
        for a, b, c in self.random_triples(23):
            self.assertEqual(ord_cmp(a, b) is Cmp.EQ, a == b)
            self.assertEqual(ord_cmp(a, b).value, -ord_cmp(b, a).value)
            if a <= b <= c:
                self.assertLessEqual(a, c)

    def test_text_round_trip(self):
        """Test de que escribir y volver a leer da el mismo ordinal"""
        for a, _, _ in self.random_triples(24, count=100):
            self.assertEqual(parse_ordinal(str(a)), a)

    def test_fundamental_sequences_are_cofinal(self):
        """Test de crecimiento estricto y cofinalidad para n <= 1000"""
        rng = random.Random(25)
        limits = []
        while len(limits) < 20:
            candidate = random_ordinal(rng)
            if ord_is_limit(candidate):
                limits.append(candidate)
        for limit in limits:
            terms = [fundamental_seq(limit, n) for n in range(1001)]
            for smaller, larger in zip(terms, terms[1:]):
                self.assertLess(smaller, larger)
            self.assertLess(terms[-1], limit)
            self.assertTrue(all(ord_is_successor(term) for term in terms[:10]))
            for _ in range(20):
                lower = random_ordinal(rng)
                if lower < limit:
                    self.assertTrue(any(lower < term for term in terms), f'{lower} no queda por debajo de {limit}')
