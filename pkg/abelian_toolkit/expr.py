"""Parsing of group expressions and element operands.

Group expressions follow ``term ("x" term)*`` with ``term := "add:" N | "mult:" N``,
e.g. ``add:5xmult:9``. Element operands are a residue (``30``), a bracketed or bare
comma-separated tuple for products (``[1,2]``, ``1,2``) or an enumeration index
(``#7``). Residues are reduced modulo their component's modulus here and nowhere
else.
"""
from abelian_toolkit import groups, util

from typing import List

import re

TERM_RE = re.compile(r'(?P<kind>add|mult):(?P<modulus>\d+)')
INDEX_RE = re.compile(r'#(?P<index>\d+)$')
INTEGER_RE = re.compile(r'[+-]?\d+$')
LIST_ITEM_RE = re.compile(r'\s*(?P<item>\[[^\]]*\]|[^,\[\]\s]+)\s*(?P<sep>,|$)')


def _skip_spaces(text: str, pos: int) -> int:
    while pos < len(text) and text[pos].isspace():
        pos += 1
    return pos


def parse_group(text: str) -> groups.GroupSpec:
    components = list()
    pos = 0
    while True:
        pos = _skip_spaces(text, pos)
        m = TERM_RE.match(text, pos)
        if m is None:
            raise util.ExpressionError(text, pos, '"add:N" or "mult:N"')
        modulus = int(m.group('modulus'))
        if modulus < 2:
            raise util.ExpressionError(text, m.start('modulus'), 'a modulus of at least 2')
        components.append(groups.ComponentSpec(groups.Kind(m.group('kind')), modulus))
        pos = _skip_spaces(text, m.end())
        if pos == len(text):
            return groups.GroupSpec(tuple(components))
        if text[pos] != 'x':
            raise util.ExpressionError(text, pos, '"x" or end of expression')
        pos += 1


def parse_integer(text: str, what: str = 'an integer') -> int:
    text = str(text).strip()
    if INTEGER_RE.match(text) is None:
        raise util.ExpressionError(text, 0, what)
    return int(text)


def parse_element(text: str, group: groups.Group) -> groups.Element:
    text = str(text).strip()
    m = INDEX_RE.match(text)
    if m is not None:
        return group.element_at(int(m.group('index')))
    body = text
    offset = 0
    if body.startswith('['):
        if not body.endswith(']'):
            raise util.ExpressionError(text, len(text), '"]"')
        body = body[1:-1]
        offset = 1
    residues = list()
    for xp in body.split(','):
        if INTEGER_RE.match(xp.strip()) is None:
            raise util.ExpressionError(text, offset, 'a decimal residue')
        residues.append(int(xp))
        offset += len(xp) + 1
    if len(residues) != group.spec.arity:
        raise util.ExpressionError(text, 0, f'{group.spec.arity} residue(s) for {group.spec.label()}')
    return tuple(xr % xc.modulus for xr, xc in zip(residues, group.components))


def parse_element_list(texts: List[str], group: groups.Group) -> List[groups.Element]:
    """Elements from one or more arguments, each holding one or more comma-separated operands.

    For products an argument without brackets or indices is a single bare tuple.
    """
    elements = list()
    for text in texts:
        text = str(text)
        if group.spec.arity > 1 and '[' not in text and '#' not in text:
            elements.append(parse_element(text, group))
            continue
        pos = 0
        while pos < len(text):
            m = LIST_ITEM_RE.match(text, pos)
            if m is None:
                raise util.ExpressionError(text, pos, 'an element operand')
            elements.append(parse_element(m.group('item'), group))
            pos = m.end()
            if m.group('sep') == ',' and pos == len(text):
                raise util.ExpressionError(text, pos, 'an element operand after ","')
    if len(elements) == 0:
        raise util.ExpressionError(' '.join(texts), 0, 'at least one element')
    return elements
