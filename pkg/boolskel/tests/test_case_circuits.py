import unittest

from boolskel.formats import parse_aiger
from boolskel.network import BooleanNetwork, Fanin
from boolskel.types import GateKind

PI, PO, AND2, OR2, BUF = GateKind.PI, GateKind.PO, GateKind.AND2, GateKind.OR2, GateKind.BUF

FULL_ADDER_AAG = """aag 10 3 0 2 7
2
4
6
18
21
8 2 4
10 3 5
12 9 11
14 12 6
16 13 7
18 15 17
20 9 15
i0 a
i1 b
i2 cin
o0 sum
o1 cout
c
full adder, sum = a ^ b ^ cin
"""


def ripple_carry_adder_aag(bits: int) -> str:
    """AIGER text of an n-bit adder without carry-in.

    Inputs alternate a0 b0 a1 b1 ...; outputs are S0..S(n-1) then every
    carry CO0..CO(n-1).
    """
    counter = [0]
    ands = []

    def new_literal():
        counter[0] += 1
        return 2 * counter[0]

    def and_gate(x, y):
        lit = new_literal()
        ands.append((lit, x, y))
        return lit

    a, b = [], []
    for _ in range(bits):
        a.append(new_literal())
        b.append(new_literal())

    sums, carries, carry = [], [], None
    for i in range(bits):
        t1 = and_gate(a[i], b[i])
        t2 = and_gate(a[i] ^ 1, b[i] ^ 1)
        x = and_gate(t1 ^ 1, t2 ^ 1)
        if carry is None:
            s, c = x, t1
        else:
            u1 = and_gate(x, carry)
            u2 = and_gate(x ^ 1, carry ^ 1)
            s = and_gate(u1 ^ 1, u2 ^ 1)
            c = and_gate(t1 ^ 1, u1 ^ 1) ^ 1
        sums.append(s)
        carries.append(c)
        carry = c

    lines = [f'aag {counter[0]} {2 * bits} 0 {2 * bits} {len(ands)}']
    for i in range(bits):
        lines.extend((str(a[i]), str(b[i])))
    lines.extend(str(lit) for lit in sums + carries)
    lines.extend(f'{lhs} {x} {y}' for lhs, x, y in ands)
    for i in range(bits):
        lines.extend((f'i{2 * i} a{i}', f'i{2 * i + 1} b{i}'))
    lines.extend(f'o{i} S{i}' for i in range(bits))
    lines.extend(f'o{bits + i} CO{i}' for i in range(bits))
    return '\n'.join(lines) + '\n'


def chain(length: int = 3) -> BooleanNetwork:
    """PI -> BUF x length -> PO"""
    kinds = [PI] + [BUF] * length + [PO]
    fanins = [[]] + [[Fanin(v)] for v in range(length + 1)]
    names = ['x'] + [f'n{i}' for i in range(1, length + 1)] + ['y']
    return BooleanNetwork(kinds, fanins, names)


def chain_with_shortcut() -> BooleanNetwork:
    """x -> n1 -> n2 -> n3 -> g -> y, with a direct x -> g branch"""
    kinds = [PI, BUF, BUF, BUF, AND2, PO]
    fanins = [[], [Fanin(0)], [Fanin(1)], [Fanin(2)], [Fanin(3), Fanin(0)], [Fanin(4)]]
    return BooleanNetwork(kinds, fanins, ['x', 'n1', 'n2', 'n3', 'g', 'y'])


def diamond() -> BooleanNetwork:
    """p -> a, q -> b, j = a & b, o = j"""
    kinds = [PI, PI, BUF, BUF, AND2, PO]
    fanins = [[], [], [Fanin(0)], [Fanin(1)], [Fanin(2), Fanin(3)], [Fanin(4)]]
    return BooleanNetwork(kinds, fanins, ['p', 'q', 'a', 'b', 'j', 'o'])


def single_and() -> BooleanNetwork:
    return BooleanNetwork([PI, PI, AND2, PO], [[], [], [Fanin(0), Fanin(1)], [Fanin(2)]], ['a', 'b', 'g', 'y'])


def balanced_tree(kind: GateKind = AND2) -> BooleanNetwork:
    """((x0 . x1) . (x2 . x3))"""
    kinds = [PI] * 4 + [kind] * 3 + [PO]
    fanins = [[]] * 4 + [[Fanin(0), Fanin(1)], [Fanin(2), Fanin(3)], [Fanin(4), Fanin(5)], [Fanin(6)]]
    return BooleanNetwork(kinds, fanins)


def chained_tree(kind: GateKind = AND2) -> BooleanNetwork:
    """(((x0 . x1) . x2) . x3)"""
    kinds = [PI] * 4 + [kind] * 3 + [PO]
    fanins = [[]] * 4 + [[Fanin(0), Fanin(1)], [Fanin(4), Fanin(2)], [Fanin(5), Fanin(3)], [Fanin(6)]]
    return BooleanNetwork(kinds, fanins)


def two_outputs() -> BooleanNetwork:
    """p = a & b and q = (a & b) & c share the gate driving p"""
    kinds = [PI, PI, PI, AND2, AND2, PO, PO]
    fanins = [[], [], [], [Fanin(0), Fanin(1)], [Fanin(3), Fanin(2)], [Fanin(3)], [Fanin(4)]]
    return BooleanNetwork(kinds, fanins, ['a', 'b', 'c', 'g1', 'g2', 'p', 'q'])


def independent_outputs() -> BooleanNetwork:
    return BooleanNetwork([PI, PI, PO, PO], [[], [], [Fanin(0)], [Fanin(1, True)]])


def dangling_chain() -> BooleanNetwork:
    """y = x0; g = x0 & x1 -> n1 -> n2 reaches no output"""
    kinds = [PI, PI, AND2, BUF, BUF, PO]
    fanins = [[], [], [Fanin(0), Fanin(1)], [Fanin(2)], [Fanin(3)], [Fanin(0)]]
    return BooleanNetwork(kinds, fanins, ['x0', 'x1', 'g', 'n1', 'n2', 'y'])


def po_depth_swap() -> BooleanNetwork:
    """p1 = p2 = a & b at level 2, q = a through two buffers at level 3"""
    kinds = [PI, PI, AND2, BUF, BUF, PO, PO, PO]
    fanins = [[], [], [Fanin(0), Fanin(1)], [Fanin(0)], [Fanin(3)], [Fanin(2)], [Fanin(2)], [Fanin(4)]]
    return BooleanNetwork(kinds, fanins, ['a', 'b', 'g', 'n1', 'n2', 'p1', 'p2', 'q'])


class BaseTestCase(unittest.TestCase):

    def setUp(self):
        self.full_adder_text = FULL_ADDER_AAG
        self.full_adder = parse_aiger(FULL_ADDER_AAG.encode())
        self.full_adder_nodes = 21
        self.full_adder_inverters = 9
        self.full_adder_depth = 9
        # skeleton node and edge counts per fanin limit
        self.full_adder_skeletons = {1: (21, 25), 2: (11, 14), 3: (7, 9), 4: (5, 6)}
        self.cra4 = parse_aiger(ripple_carry_adder_aag(4).encode())
        self.chain = chain()
        self.chain_with_shortcut = chain_with_shortcut()
        self.diamond = diamond()
        self.single_and = single_and()
        self.balanced_and = balanced_tree()
        self.chained_and = chained_tree()
        self.balanced_or = balanced_tree(OR2)
        self.two_outputs = two_outputs()
        self.independent_outputs = independent_outputs()
        self.dangling_chain = dangling_chain()
        self.po_depth_swap = po_depth_swap()
