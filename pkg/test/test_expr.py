import unittest

from abelian_toolkit import expr, groups
from abelian_toolkit.groups import Kind, make_group
from abelian_toolkit.util import DomainError, ExpressionError, MembershipError


class TestParseGroup(unittest.TestCase):
    def test_terms(self):
        spec = expr.parse_group('add:5xmult:9')
        self.assertEqual([(xc.kind, xc.modulus) for xc in spec.components],
            [(Kind.ADDITIVE, 5), (Kind.MULTIPLICATIVE, 9)])
        self.assertEqual(spec.label(), '(5,+)x(9,x)')
        self.assertEqual(expr.parse_group(' mult:32 ').expr(), 'mult:32')
        self.assertEqual(expr.parse_group('add:2 x add:2 x add:2').arity, 3)

    def test_expr_round_trip(self):
        for text in ('add:10', 'mult:15', 'add:6xmult:9', 'mult:15xmult:16xadd:2'):
            self.assertEqual(expr.parse_group(text).expr(), text)

    def test_errors(self):
        cases = {
            '': 0,
            'foo:5': 0,
            'add:': 0,
            'add:5x': 6,
            'add:5*mult:9': 5,
            'add:5 mult:9': 6,
            'add:1': 4,
            'mult:0': 5,
        }
        for text, position in cases.items():
            with self.assertRaises(ExpressionError, msg=text) as cm:
                expr.parse_group(text)
            self.assertEqual(cm.exception.position, position, text)
            self.assertIsInstance(cm.exception, DomainError)


class TestParseOperands(unittest.TestCase):
    def setUp(self) -> None:
        self.add10 = make_group(groups.additive(10))
        self.mult15 = make_group(groups.multiplicative(15))
        self.prod = make_group(groups.direct_product(groups.additive(5), groups.multiplicative(9)))

    def test_integers(self):
        self.assertEqual(expr.parse_integer('12'), 12)
        self.assertEqual(expr.parse_integer(' -3 '), -3)
        with self.assertRaises(ExpressionError):
            expr.parse_integer('3.5')
        with self.assertRaises(ExpressionError):
            expr.parse_integer('two')

    def test_residues(self):
        self.assertEqual(expr.parse_element('7', self.add10), (7,))
        self.assertEqual(expr.parse_element('17', self.add10), (7,))
        self.assertEqual(expr.parse_element('-3', self.add10), (7,))
        self.assertEqual(expr.parse_element('[1,8]', self.prod), (1, 8))
        self.assertEqual(expr.parse_element('1, 8', self.prod), (1, 8))
        self.assertEqual(expr.parse_element('[6,10]', self.prod), (1, 1))

    def test_indices(self):
        self.assertEqual(expr.parse_element('#3', self.prod), (0, 4))
        self.assertEqual(expr.parse_element('#1', self.mult15), (1,))
        with self.assertRaises(MembershipError):
            expr.parse_element('#31', self.prod)
        with self.assertRaises(MembershipError):
            expr.parse_element('#0', self.prod)

    def test_bad_operands(self):
        for text in ('[1,8', '1,x', '', '[1,2,3]', '4,'):
            with self.assertRaises(ExpressionError, msg=text):
                expr.parse_element(text, self.prod)
        with self.assertRaises(ExpressionError):
            expr.parse_element('1,2', self.add10)

    def test_non_members_survive_parsing(self):
        self.assertEqual(expr.parse_element('10', self.mult15), (10,))
        self.assertFalse(self.mult15.contains(expr.parse_element('10', self.mult15)))

    def test_lists(self):
        g = make_group(groups.additive(120))
        self.assertEqual(expr.parse_element_list(['60,30,15'], g), [(60,), (30,), (15,)])
        self.assertEqual(expr.parse_element_list(['60', '30', '15'], g), [(60,), (30,), (15,)])
        self.assertEqual(expr.parse_element_list(['#2,#3'], g), [(1,), (2,)])
        self.assertEqual(expr.parse_element_list(['[1,1],[0,8]'], self.prod), [(1, 1), (0, 8)])
        self.assertEqual(expr.parse_element_list(['1,1', '#6'], self.prod), [(1, 1), (0, 8)])

    def test_list_errors(self):
        with self.assertRaises(ExpressionError):
            expr.parse_element_list(['60,'], self.add10)
        with self.assertRaises(ExpressionError):
            expr.parse_element_list([], self.add10)


if __name__ == '__main__':
    unittest.main()
