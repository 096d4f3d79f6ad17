"""
boolskel.formats.aiger
~~~~~~~~~~~~~~~~~~~~~~

Combinational AIGER reader (ASCII ``aag`` and binary ``aig``) and ASCII
writer. Complemented literals stay on the edges as complement flags.
"""

import logging
import re
from typing import Dict, List, Optional, Tuple

from boolskel.exceptions import NetworkFormatError
from boolskel.network import BooleanNetwork, Fanin, topological_order, validate
from boolskel.types import DiagnosticRule, GateKind

logger = logging.getLogger(__name__)

_SYMBOL = re.compile(rb'^([ilo])(\d+) (.*)$')


class _Header:
    def __init__(self, binary, max_var, inputs, latches, outputs, ands):
        self.binary = binary
        self.max_var = max_var
        self.inputs = inputs
        self.latches = latches
        self.outputs = outputs
        self.ands = ands


def _parse_header(line: bytes) -> _Header:
    tokens = line.split()
    if not tokens or tokens[0] not in (b'aag', b'aig'):
        raise NetworkFormatError('missing "aag"/"aig" header', line=1)
    try:
        fields = [int(t) for t in tokens[1:]]
    except ValueError:
        raise NetworkFormatError('non-numeric header field', line=1)
    if len(fields) < 5 or any(f < 0 for f in fields):
        raise NetworkFormatError('header needs M I L O A', line=1)
    max_var, inputs, latches, outputs, ands = fields[:5]
    if latches > 0:
        raise NetworkFormatError(f'sequential AIGER with {latches} latches is not supported', line=1)
    if any(fields[5:]):
        raise NetworkFormatError('bad/constraint/justice/fairness sections are not supported', line=1)
    if max_var < inputs + ands:
        raise NetworkFormatError(f'M={max_var} is smaller than I+A={inputs + ands}', line=1)
    return _Header(tokens[0] == b'aig', max_var, inputs, latches, outputs, ands)


def _literal(token: bytes, header: _Header, line: int) -> int:
    try:
        lit = int(token)
    except ValueError:
        raise NetworkFormatError(f'invalid literal {token!r}', line=line)
    if lit < 0 or lit >> 1 > header.max_var:
        raise NetworkFormatError(f'literal {lit} out of range', line=line)
    return lit


class _Builder:
    """Collects AIGER definitions and numbers them as network nodes"""

    def __init__(self, header: _Header):
        self.header = header
        self.input_lits: List[int] = []
        self.output_lits: List[Tuple[int, Optional[int], Optional[int]]] = []
        self.and_defs: List[Tuple[int, int, int, Optional[int], Optional[int]]] = []
        self.input_names: Dict[int, str] = {}
        self.output_names: Dict[int, str] = {}

    def build(self) -> BooleanNetwork:
        var_node: Dict[int, int] = {}
        for index, lit in enumerate(self.input_lits):
            var_node[lit >> 1] = index

        uses_const = (any(lit >> 1 == 0 for lit, _, _ in self.output_lits)
                      or any(a >> 1 == 0 or b >> 1 == 0 for _, a, b, _, _ in self.and_defs))
        kinds = [GateKind.PI] * len(self.input_lits)
        names: List[Optional[str]] = [self.input_names.get(i) for i in range(len(self.input_lits))]
        locations: List[Tuple[Optional[int], Optional[int]]] = [(None, None)] * len(kinds)
        if uses_const:
            var_node[0] = len(kinds)
            kinds.append(GateKind.CONST0)
            names.append(None)
            locations.append((None, None))

        for lhs, _, _, line, offset in self.and_defs:
            var = lhs >> 1
            if var in var_node:
                raise NetworkFormatError(f'variable {var} defined twice', line=line, offset=offset)
            var_node[var] = len(kinds)
            kinds.append(GateKind.AND2)
            names.append(None)
            locations.append((line, offset))

        def resolve(lit, line, offset):
            node = var_node.get(lit >> 1)
            if node is None:
                raise NetworkFormatError(f'literal {lit} is never defined', line=line, offset=offset)
            return Fanin(node, bool(lit & 1))

        fanins: List[Tuple[Fanin, ...]] = [()] * len(kinds)
        for lhs, rhs0, rhs1, line, offset in self.and_defs:
            fanins[var_node[lhs >> 1]] = (resolve(rhs0, line, offset), resolve(rhs1, line, offset))

        for index, (lit, line, offset) in enumerate(self.output_lits):
            fanins.append((resolve(lit, line, offset),))
            kinds.append(GateKind.PO)
            names.append(self.output_names.get(index))
            locations.append((line, offset))

        net = BooleanNetwork(kinds, fanins, names)
        for diagnostic in validate(net):
            if diagnostic.rule is DiagnosticRule.CYCLE:
                line, offset = locations[diagnostic.node]
                raise NetworkFormatError(f'cyclic definition: {diagnostic.message}', line=line, offset=offset)
        logger.debug('parsed AIGER: %d inputs, %d ands, %d outputs', len(self.input_lits),
                     len(self.and_defs), len(self.output_lits))
        return net

    def read_symbols(self, lines, first_line):
        for number, raw in enumerate(lines, start=first_line):
            if raw.startswith(b'c'):
                break
            if not raw.strip():
                continue
            match = _SYMBOL.match(raw.rstrip(b'\r'))
            if not match:
                raise NetworkFormatError(f'malformed symbol entry {raw[:40]!r}', line=number)
            kind, index, name = match.group(1), int(match.group(2)), match.group(3).decode('utf-8', 'replace')
            if kind == b'i' and index < self.header.inputs:
                self.input_names[index] = name
            elif kind == b'o' and index < self.header.outputs:
                self.output_names[index] = name
            else:
                raise NetworkFormatError(f'symbol refers to missing {kind.decode()}{index}', line=number)


def parse_aiger(data: bytes) -> BooleanNetwork:
    newline = data.find(b'\n')
    header = _parse_header(data if newline < 0 else data[:newline])
    if header.binary:
        return _parse_binary(data, header, newline + 1 if newline >= 0 else len(data))
    return _parse_ascii(data, header)


def _parse_ascii(data: bytes, header: _Header) -> BooleanNetwork:
    lines = data.split(b'\n')
    builder = _Builder(header)
    cursor = 1

    def next_line():
        nonlocal cursor
        if cursor >= len(lines):
            raise NetworkFormatError('unexpected end of file', line=cursor + 1)
        cursor += 1
        return cursor, lines[cursor - 1].split()

    for _ in range(header.inputs):
        number, tokens = next_line()
        if len(tokens) != 1:
            raise NetworkFormatError('input line needs one literal', line=number)
        lit = _literal(tokens[0], header, number)
        if lit < 2 or lit & 1:
            raise NetworkFormatError(f'input literal {lit} must be positive and even', line=number)
        builder.input_lits.append(lit)
    if len({lit for lit in builder.input_lits}) != len(builder.input_lits):
        raise NetworkFormatError('input literal defined twice', line=cursor)

    for _ in range(header.outputs):
        number, tokens = next_line()
        if len(tokens) != 1:
            raise NetworkFormatError('output line needs one literal', line=number)
        builder.output_lits.append((_literal(tokens[0], header, number), number, None))

    for _ in range(header.ands):
        number, tokens = next_line()
        if len(tokens) != 3:
            raise NetworkFormatError('and line needs three literals', line=number)
        lhs, rhs0, rhs1 = (_literal(t, header, number) for t in tokens)
        if lhs < 2 or lhs & 1:
            raise NetworkFormatError(f'and literal {lhs} must be positive and even', line=number)
        builder.and_defs.append((lhs, rhs0, rhs1, number, None))

    builder.read_symbols(lines[cursor:], cursor + 1)
    return builder.build()


def _decode_varint(data: bytes, position: int) -> Tuple[int, int]:
    value, shift = 0, 0
    while True:
        if position >= len(data):
            raise NetworkFormatError('truncated binary and-gate section', offset=position)
        byte = data[position]
        position += 1
        value |= (byte & 0x7F) << shift
        if not byte & 0x80:
            return value, position
        shift += 7


def _parse_binary(data: bytes, header: _Header, position: int) -> BooleanNetwork:
    builder = _Builder(header)
    builder.input_lits = [2 * (i + 1) for i in range(header.inputs)]
    line = 2
    for _ in range(header.outputs):
        end = data.find(b'\n', position)
        if end < 0:
            raise NetworkFormatError('unexpected end of file in outputs', line=line, offset=position)
        tokens = data[position:end].split()
        if len(tokens) != 1:
            raise NetworkFormatError('output line needs one literal', line=line)
        builder.output_lits.append((_literal(tokens[0], header, line), line, None))
        position = end + 1
        line += 1

    for index in range(header.ands):
        lhs = 2 * (header.inputs + header.latches + index + 1)
        start = position
        delta0, position = _decode_varint(data, position)
        delta1, position = _decode_varint(data, position)
        rhs0 = lhs - delta0
        rhs1 = rhs0 - delta1
        if delta0 == 0 or rhs1 < 0:
            raise NetworkFormatError(f'and gate {lhs} has invalid deltas {delta0}, {delta1}', offset=start)
        builder.and_defs.append((lhs, rhs0, rhs1, None, start))

    builder.read_symbols(data[position:].split(b'\n'), line)
    return builder.build()


def serialize_aiger(net: BooleanNetwork) -> bytes:
    """ASCII AIGER of a network built from AND2/INV/BUF gates.

    INV and BUF nodes fold into literal complements, so they do not survive
    a round trip as nodes.
    """
    literal: Dict[int, int] = {}
    for index, pi in enumerate(net.pi_order):
        literal[pi] = 2 * (index + 1)

    next_var = len(net.pi_order) + 1
    ands: List[Tuple[int, int, int]] = []

    def fanin_literal(fanin: Fanin) -> int:
        return literal[fanin.node] ^ int(fanin.complemented)

    for v in topological_order(net):
        kind = net.kind(v)
        if kind is GateKind.PI:
            continue
        if kind is GateKind.CONST0:
            literal[v] = 0
        elif kind is GateKind.AND2:
            literal[v] = 2 * next_var
            next_var += 1
            rhs0, rhs1 = (fanin_literal(f) for f in net.fanins(v))
            ands.append((literal[v], rhs0, rhs1))
        elif kind is GateKind.INV:
            literal[v] = fanin_literal(net.fanins(v)[0]) ^ 1
        elif kind in (GateKind.BUF, GateKind.PO):
            literal[v] = fanin_literal(net.fanins(v)[0])
        else:
            raise NetworkFormatError(f'{kind.value} node {v} has no AIGER encoding')
    outputs = [literal[po] for po in net.po_order]

    lines = [f'aag {next_var - 1} {len(net.pi_order)} 0 {len(outputs)} {len(ands)}']
    lines.extend(str(literal[pi]) for pi in net.pi_order)
    lines.extend(str(lit) for lit in outputs)
    lines.extend(f'{lhs} {rhs0} {rhs1}' for lhs, rhs0, rhs1 in ands)
    for index, pi in enumerate(net.pi_order):
        if net.names[pi] is not None:
            lines.append(f'i{index} {net.names[pi]}')
    for index, po in enumerate(net.po_order):
        if net.names[po] is not None:
            lines.append(f'o{index} {net.names[po]}')
    return ('\n'.join(lines) + '\n').encode('ascii')
