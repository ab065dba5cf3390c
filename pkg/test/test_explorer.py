import io
import json
import unittest
from unittest import mock

from abelian_toolkit.explorer import GroupExplorer
from abelian_toolkit.util import InternalConsistencyError


def invoke(*argv):
    with mock.patch('sys.stdout', new_callable=io.StringIO) as out, \
            mock.patch('sys.stderr', new_callable=io.StringIO):
        code = GroupExplorer(list(argv)).run()
    return code, out.getvalue()


def invoke_json(*argv):
    code, out = invoke(*argv, '--json')
    return code, json.loads(out)


class TestShow(unittest.TestCase):
    def test_default_report(self):
        code, out = invoke('show', 'add:10')
        self.assertEqual(code, 0)
        self.assertEqual(out, 'Group: (10,+)\nElements: 0 1 2 3 4 5 6 7 8 9\nIdentity: 0\nOrder: 10\n')

    def test_multiplicative(self):
        code, data = invoke_json('show', 'mult:15')
        self.assertEqual(data, {
            'group': 'mult:15',
            'elements': [1, 2, 4, 7, 8, 11, 13, 14],
            'identity': 1,
            'order': 8,
        })

    def test_orders_and_table(self):
        code, data = invoke_json('show', 'add:5xmult:9', '--orders', '--table')
        self.assertEqual(code, 0)
        self.assertNotIn('elements', data)
        self.assertEqual(data['table'][6], {'index': 7, 'element': [1, 1]})
        self.assertEqual(data['orders'][7], {'element': [1, 2], 'order': 30})
        code, out = invoke('show', 'add:5xmult:9', '--table')
        self.assertIn('Element 3 is [0,4]\n', out)

    def test_global_flags_on_either_side(self):
        _, before = invoke('--json', '--cap', '100', 'show', 'add:10')
        _, after = invoke('show', 'add:10', '--json', '--cap', '100')
        self.assertEqual(before, after)
        self.assertEqual(json.loads(before)['order'], 10)

    def test_deterministic(self):
        self.assertEqual(invoke('show', 'mult:64', '--orders'), invoke('show', 'mult:64', '--orders'))


class TestElem(unittest.TestCase):
    def test_additive(self):
        self.assertEqual(invoke('elem', 'add:10', 'inv', '3'), (0, '7\n'))
        self.assertEqual(invoke('elem', 'add:10', 'op', '7', '6'), (0, '3\n'))
        self.assertEqual(invoke('elem', 'add:10', 'pow', '7', '3'), (0, '1\n'))
        self.assertEqual(invoke('elem', 'add:10', 'order', '4'), (0, '5\n'))

    def test_multiplicative(self):
        self.assertEqual(invoke('elem', 'mult:15', 'inv', '2'), (0, '8\n'))
        self.assertEqual(invoke('elem', 'mult:15', 'pow', '2', '10'), (0, '4\n'))
        self.assertEqual(invoke('elem', 'mult:64', 'cycle', '17'), (0, '17 33 49 1\n'))

    def test_products(self):
        self.assertEqual(invoke('elem', 'add:5xmult:9', 'inv', '#3'), (0, '[0,7]\n'))
        self.assertEqual(invoke('elem', 'add:5xmult:9', 'op', '#7', '#6'), (0, '[1,8]\n'))
        self.assertEqual(invoke('elem', 'add:5xmult:9', 'pow', '[1,1]', '3'), (0, '[3,1]\n'))
        code, data = invoke_json('elem', 'add:6xmult:9', 'op', '[0,4]', '[0,5]')
        self.assertEqual(data, {'group': 'add:6xmult:9', 'action': 'op', 'operands': [[0, 4], [0, 5]],
            'result': [0, 2]})

    def test_operand_errors(self):
        self.assertEqual(invoke('elem', 'mult:15', 'inv', '10')[0], 4)
        self.assertEqual(invoke('elem', 'add:5xmult:9', 'inv', '#31')[0], 4)
        self.assertEqual(invoke('elem', 'mult:15', 'op', '2')[0], 2)
        self.assertEqual(invoke('elem', 'mult:15', 'pow', '2', '-1')[0], 2)
        self.assertEqual(invoke('elem', 'add:5xmult:9', 'inv', '1')[0], 2)


class TestSubgroup(unittest.TestCase):
    def test_additive_120(self):
        code, out = invoke('subgroup', 'add:120', '60,30,15')
        self.assertEqual(code, 0)
        self.assertEqual(out, 'Group: (120,+)\nCarrier: 0 15 30 45 60 75 90 105\nOrder: 8\n'
            'Generates the group: no\n')

    def test_cycles_and_orders(self):
        code, data = invoke_json('subgroup', 'mult:64', '17', '7', '--cycles', '--orders')
        self.assertEqual(data['cycles'][0], {'generator': 17, 'cycle': [17, 33, 49, 1]})
        self.assertEqual(data['carrier'], [1, 7, 17, 23, 33, 39, 49, 55])
        self.assertEqual([x['order'] for x in data['orders']], [1, 8, 4, 8, 2, 8, 4, 8])
        self.assertFalse(data['generating_set'])

    def test_check(self):
        code, data = invoke_json('subgroup', 'add:10', '0,5', '--check')
        self.assertTrue(data['is_subgroup'])
        self.assertIsNone(data['violation'])
        code, out = invoke('subgroup', 'add:10', '0,5,7', '--check')
        self.assertEqual(code, 0)
        self.assertIn('Subgroup criterion: fails', out)
        self.assertIn('Generates the group: yes', out)

    def test_non_member_generator(self):
        self.assertEqual(invoke('subgroup', 'mult:15', '2,10')[0], 4)


class TestClassification(unittest.TestCase):
    def test_classify(self):
        code, out = invoke('classify', 'mult:15')
        self.assertEqual(code, 0)
        self.assertEqual(out.splitlines(), [
            'Group: (15,x)',
            'Order: 8',
            'Order multiset: 1 2 2 2 4 4 4 4',
            'Primary decomposition: Z4 x Z2',
            'Invariant factors: 4 2',
            'Isomorphic to: Z4 x Z2',
        ])

    def test_classify_json(self):
        code, data = invoke_json('classify', 'add:24xadd:32xadd:42')
        self.assertEqual(data['invariant_factors'], [672, 24, 2])
        self.assertEqual(data['primary'], {'2': [5, 3, 1], '3': [1, 1], '7': [1]})

    def test_trivial(self):
        code, out = invoke('classify', 'mult:2')
        self.assertIn('Invariant factors: (trivial)', out)

    def test_iso(self):
        code, out = invoke('iso', 'mult:32', 'add:8xadd:2')
        self.assertEqual(code, 0)
        self.assertTrue(out.endswith('(32,x) is isomorphic to (8,+)x(2,+)\n'))
        code, out = invoke('iso', 'mult:32', 'add:16')
        self.assertEqual(code, 1)
        self.assertTrue(out.endswith('(32,x) is not isomorphic to (16,+)\n'))
        code, data = invoke_json('iso', 'mult:32', 'add:4xadd:2xadd:2', '--p-elements')
        self.assertEqual(code, 1)
        self.assertEqual(data['method'], 'p-elements')
        self.assertEqual(data['groups'][0]['invariant_factors'], [8, 2])

    def test_candidates(self):
        code, out = invoke('candidates', '16')
        self.assertEqual(out.splitlines(), ['16', '8 2', '4 4', '4 2 2', '2 2 2 2', 'Classes: 5'])
        code, data = invoke_json('candidates', '672')
        self.assertEqual(data['count'], 7)
        code, data = invoke_json('candidates', '16', '--match', 'mult:32')
        self.assertEqual(data['match'], [8, 2])
        self.assertEqual(data['candidates'][1]['order_multiset'], [1, 2, 2, 2, 4, 4, 4, 4] + [8] * 8)
        self.assertEqual(invoke('candidates', '16', '--match', 'mult:15')[0], 2)
        self.assertEqual(invoke('candidates', 'sixteen')[0], 2)

    def test_torsion(self):
        code, out = invoke('torsion', '24', '32', '42')
        self.assertEqual(out.splitlines(), [
            'Prime powers: 8 3 32 2 3 7',
            'Invariant factors: 672 24 2',
            'Z24 x Z32 x Z42 is isomorphic to Z672 x Z24 x Z2',
        ])


def joined(values):
    return ' '.join(str(x) for x in values)


class TestJsonMatchesText(unittest.TestCase):
    cases = [
        (('show', 'mult:15'), lambda d: f'Order: {d["order"]}'),
        (('show', 'add:6', '--elements'), lambda d: f'Elements: {joined(d["elements"])}'),
        (('elem', 'mult:15', 'inv', '2'), lambda d: str(d['result'])),
        (('elem', 'add:10', 'order', '4'), lambda d: str(d['result'])),
        (('subgroup', 'add:120', '60,30,15'), lambda d: f'Carrier: {joined(d["carrier"])}'),
        (('subgroup', 'mult:64', '17,7'), lambda d: f'Order: {d["order"]}'),
        (('classify', 'mult:15'), lambda d: f'Invariant factors: {joined(d["invariant_factors"])}'),
        (('classify', 'add:24xadd:32xadd:42'), lambda d: f'Order multiset: {joined(d["order_multiset"])}'),
        (('iso', 'mult:32', 'add:16'),
            lambda d: f'(32,x) invariant factors: {joined(d["groups"][0]["invariant_factors"])}'),
        (('iso', 'mult:15', 'add:4xadd:2'),
            lambda d: f'(4,+)x(2,+) order multiset: {joined(d["groups"][1]["order_multiset"])}'),
        (('candidates', '16'), lambda d: f'Classes: {d["count"]}'),
        (('candidates', '72'), lambda d: joined(d['candidates'][0]['invariant_factors'])),
        (('torsion', '24', '32', '42'), lambda d: f'Prime powers: {joined(d["prime_powers"])}'),
        (('torsion', '4', '6'), lambda d: f'Invariant factors: {joined(d["invariant_factors"])}'),
    ]

    def test_cases(self):
        for argv, line in self.cases:
            code, text = invoke(*argv)
            json_code, raw = invoke(*argv, '--json')
            data = json.loads(raw)
            self.assertEqual(code, json_code, argv)
            self.assertEqual(json.dumps(data, indent=2) + '\n', raw, argv)
            self.assertIn(line(data), text.splitlines(), argv)


class TestExitCodes(unittest.TestCase):
    def test_expression_errors(self):
        self.assertEqual(invoke('show', 'add:1')[0], 2)
        self.assertEqual(invoke('show', 'add:5*mult:9')[0], 2)

    def test_cap(self):
        self.assertEqual(invoke('show', 'add:1001xadd:1000')[0], 3)
        self.assertEqual(invoke('show', 'add:100', '--cap', '99')[0], 3)
        self.assertEqual(invoke('show', 'add:100', '--cap', '100')[0], 0)

    def test_huge_prime_modulus(self):
        self.assertEqual(invoke('show', 'mult:1000000000000000003')[0], 3)
        self.assertEqual(invoke('classify', 'add:2xmult:1000000000000000003')[0], 3)

    def test_argument_errors(self):
        with mock.patch('sys.stderr', new_callable=io.StringIO):
            with self.assertRaises(SystemExit) as cm:
                GroupExplorer(['frobnicate'])
            self.assertEqual(cm.exception.code, 2)
            with self.assertRaises(SystemExit) as cm:
                GroupExplorer(['show', 'add:10', '--cap', '0'])
            self.assertEqual(cm.exception.code, 2)

    def test_internal_errors(self):
        with mock.patch('abelian_toolkit.structure.primary_decomposition',
                side_effect=InternalConsistencyError('broken')):
            self.assertEqual(invoke('classify', 'add:4'), (8, ''))


if __name__ == '__main__':
    unittest.main()
