"""
Gramática textual en s-expresiones para elementos, conjuntos de puntos e
isometrías.

    (alphabet finite 3)
    (elem :rho 1 :jumps [(lim :at 0 :off 1 :ratio 1/2
                              :body [(step 0 1) (step 1/2 0)] :label 1)])
"""
import re
from dataclasses import dataclass
from fractions import Fraction

from django.core.exceptions import ValidationError

from .cbrank import Atom, PointCluster, PointRamp
from .elements import (
    LimitCluster,
    RampCluster,
    Step,
    make_element,
    parse_alphabet,
)
from .isometries import (
    BranchSwap,
    Compose,
    DirPerm,
    Identity,
    Reflect,
    Relabel,
    Translate,
    dir_perm,
    relabel,
    translate,
)
from .ordinals import parse_ordinal
from .validators import validate_rational

_TOKEN_RE = re.compile(
    r'''
    (?P<space>\s+|;[^\n]*)
  | (?P<open>[(\[])
  | (?P<close>[)\]])
  | (?P<string>"[^"\n]*")
  | (?P<atom>[^\s()\[\]";]+)
    ''',
    re.VERBOSE,
)

_CLOSING = {'(': ')', '[': ']'}


@dataclass
class Token:
    text: str
    line: int
    column: int


@dataclass
class Node:
    bracket: str
    items: list
    line: int
    column: int

    @property
    def head(self):
        if self.items and isinstance(self.items[0], Token):
            return self.items[0].text
        return None


def parse_error(where, reason, invariant=None):
    return ValidationError(
        'Error de sintaxis en línea %(line)s, columna %(column)s: %(reason)s',
        code='parse_error',
        params={
            'line': where.line,
            'column': where.column,
            'reason': reason,
            'invariant': invariant,
        },
    )


def tokenize(text):
    tokens = []
    line, line_start = 1, 0
    position = 0
    while position < len(text):
        match = _TOKEN_RE.match(text, position)
        column = position - line_start + 1
        if match is None:
            raise parse_error(Token('', line, column), f'carácter inesperado {text[position]!r}')
        kind = match.lastgroup
        value = match.group()
        if kind != 'space':
            tokens.append((kind, Token(value, line, column)))
        newlines = value.count('\n')
        if newlines:
            line += newlines
            line_start = position + value.rfind('\n') + 1
        position = match.end()
    return tokens


def read_forms(text):
    """Texto -> lista de formas (Node o Token) de primer nivel"""
    stack = [Node('', [], 1, 1)]
    for kind, token in tokenize(text):
        if kind == 'open':
            stack.append(Node(token.text, [], token.line, token.column))
        elif kind == 'close':
            if len(stack) == 1 or _CLOSING[stack[-1].bracket] != token.text:
                raise parse_error(token, f'cierre {token.text!r} sin apertura correspondiente')
            node = stack.pop()
            stack[-1].items.append(node)
        else:
            stack[-1].items.append(token)
    if len(stack) > 1:
        raise parse_error(stack[-1], 'falta cerrar la forma')
    return stack[0].items


def _expect(node, head, bracket='('):
    if not isinstance(node, Node) or node.bracket != bracket or (head and node.head != head):
        where = node
        expected = f'({head} ...)' if head else f'{bracket}...'
        raise parse_error(where, f'se esperaba {expected}')
    return node


def _atom(node):
    if not isinstance(node, Token):
        raise parse_error(node, 'se esperaba un átomo')
    return node.text


def _rational(node):
    try:
        return validate_rational(_atom(node))
    except ValidationError:
        raise parse_error(node, f'racional mal formado {node.text!r}')


def _natural(node):
    text = _atom(node)
    if not text.isdigit():
        raise parse_error(node, f'se esperaba un natural, no {text!r}')
    return int(text)


def _boolean(node):
    text = _atom(node)
    if text not in ('true', 'false'):
        raise parse_error(node, f'se esperaba true o false, no {text!r}')
    return text == 'true'


def _ordinal(node):
    text = _atom(node).strip('"')
    try:
        return parse_ordinal(text)
    except ValidationError:
        raise parse_error(node, f'ordinal mal formado {text!r}')


def _keywords(node, required, optional=()):
    """Lee los pares ':clave valor' tras la cabeza de la forma"""
    items = node.items[1:]
    if len(items) % 2:
        raise parse_error(node, 'argumentos con clave incompletos')
    values = {}
    for key_node, value_node in zip(items[::2], items[1::2]):
        key = _atom(key_node)
        name = key[1:]
        if not key.startswith(':') or name not in required + optional:
            raise parse_error(key_node, f'clave desconocida {key!r}')
        if name in values:
            raise parse_error(key_node, f'clave repetida {key!r}')
        values[name] = value_node
    for name in required:
        if name not in values:
            raise parse_error(node, f'falta la clave :{name}')
    return values


def _block(node):
    node = _expect(node, None)
    head = node.head
    if head == 'step':
        if len(node.items) != 3:
            raise parse_error(node, '(step Q L) necesita posición y etiqueta')
        return Step(_rational(node.items[1]), _natural(node.items[2]))
    if head == 'lim':
        values = _keywords(node, ('at', 'off', 'ratio', 'body'), ('label', 'terminal'))
        return LimitCluster(
            limit=_rational(values['at']),
            offset=_rational(values['off']),
            ratio=_rational(values['ratio']),
            body=_blocks(values['body']),
            **_closing(node, values),
        )
    if head == 'ramp':
        values = _keywords(
            node, ('at', 'off', 'ratio', 'gamma'), ('label', 'terminal', 'skip', 'up', 'down')
        )
        extra = {name: _natural(values[name]) for name in ('skip', 'up', 'down') if name in values}
        return RampCluster(
            limit=_rational(values['at']),
            offset=_rational(values['off']),
            ratio=_rational(values['ratio']),
            gamma=_ordinal(values['gamma']),
            **_closing(node, values),
            **extra,
        )
    raise parse_error(node, f'bloque desconocido {head!r}')


def _closing(node, values):
    terminal = _boolean(values['terminal']) if 'terminal' in values else False
    if terminal:
        if 'label' in values:
            raise parse_error(node, 'un cúmulo terminal no lleva :label', 'terminal_with_label')
        return {'label': None, 'terminal': True}
    if 'label' not in values:
        raise parse_error(node, 'falta la clave :label')
    return {'label': _natural(values['label']), 'terminal': False}


def _blocks(node):
    node = _expect(node, None, '[')
    return tuple(_block(item) for item in node.items)


def element_from_form(node, alphabet):
    node = _expect(node, 'elem')
    values = _keywords(node, ('rho', 'jumps'))
    rho = _rational(values['rho'])
    blocks = _blocks(values['jumps'])
    try:
        return make_element(rho, blocks, alphabet)
    except ValidationError as exc:
        raise parse_error(node, ' '.join(exc.messages), getattr(exc, 'code', None))


def _pairs(node):
    node = _expect(node, None, '[')
    pairs = []
    for item in node.items:
        item = _expect(item, None)
        if len(item.items) != 2:
            raise parse_error(item, 'cada par de la permutación es (origen destino)')
        pairs.append((_natural(item.items[0]), _natural(item.items[1])))
    return pairs


def isometry_from_form(node, alphabet):
    node = _expect(node, None)
    head = node.head
    args = node.items[1:]
    try:
        if head == 'id' and not args:
            return Identity()
        if head == 'reflect' and not args:
            return Reflect()
        if head == 'translate' and len(args) == 1:
            return translate(_rational(args[0]))
        if head == 'compose':
            return Compose(tuple(isometry_from_form(item, alphabet) for item in args))
        if head == 'branch-swap' and len(args) == 1:
            return BranchSwap(element_from_form(args[0], alphabet))
        if head == 'dir-perm' and len(args) == 3:
            values = _keywords(Node('(', [node.items[0]] + args[1:], node.line, node.column), ('map',))
            return dir_perm(element_from_form(args[0], alphabet), _pairs(values['map']))
        if head == 'relabel':
            values = _keywords(node, ('map',))
            return relabel(_pairs(values['map']), alphabet)
    except ValidationError as exc:
        if getattr(exc, 'code', None) == 'parse_error':
            raise
        raise parse_error(node, ' '.join(exc.messages), getattr(exc, 'code', None))
    raise parse_error(node, f'isometría desconocida o mal formada {head!r}')


def parse_document(text, default_alphabet):
    """
    Lee un fichero: cabecera (alphabet ...) opcional y una forma de datos.
    Devuelve (alfabeto, forma).
    """
    forms = read_forms(text)
    alphabet = default_alphabet
    if forms and isinstance(forms[0], Node) and forms[0].head == 'alphabet':
        header = forms.pop(0)
        words = ' '.join(_atom(item) for item in header.items[1:])
        try:
            alphabet = parse_alphabet(words)
        except ValidationError as exc:
            raise parse_error(header, ' '.join(exc.messages), 'invalid_alphabet')
    if len(forms) != 1:
        where = forms[1] if len(forms) > 1 else Token('', 1, 1)
        raise parse_error(where, 'se esperaba exactamente una forma de datos')
    return alphabet, forms[0]


def parse(text, alphabet):
    """Texto -> Element; la cabecera del fichero prevalece sobre alphabet"""
    alphabet, form = parse_document(text, alphabet)
    return element_from_form(form, alphabet)


def parse_isometry(text, alphabet):
    alphabet, form = parse_document(text, alphabet)
    return alphabet, isometry_from_form(form, alphabet)


def format_rational(value):
    return str(Fraction(value))


def _format_ordinal(value):
    text = value.compact()
    return f'"{text}"' if '(' in text else text


def _serialize_block(block):
    if isinstance(block, Step):
        return f'(step {format_rational(block.pos)} {block.label})'
    geometry = (
        f':at {format_rational(block.limit)} :off {format_rational(block.offset)} '
        f':ratio {format_rational(block.ratio)}'
    )
    if isinstance(block, LimitCluster):
        text = f'(lim {geometry} :body {_serialize_blocks(block.body)}'
    else:
        text = f'(ramp {geometry} :gamma {_format_ordinal(block.gamma)}'
    text += ' :terminal true' if block.terminal else f' :label {block.label}'
    if isinstance(block, RampCluster):
        if block.skip:
            text += f' :skip {block.skip}'
        if (block.up, block.down) != (1, 0):
            text += f' :up {block.up} :down {block.down}'
    return text + ')'


def _serialize_blocks(blocks):
    return '[' + ' '.join(_serialize_block(block) for block in blocks) + ']'


def serialize(element):
    return f'(elem :rho {format_rational(element.rho)} :jumps {_serialize_blocks(element.blocks)})'


def serialize_document(element):
    return f'(alphabet {element.alphabet})\n{serialize(element)}'


def _serialize_point(block):
    if isinstance(block, Atom):
        return f'(pt {format_rational(block.pos)})'
    geometry = (
        f':at {format_rational(block.limit)} :off {format_rational(block.offset)} '
        f':ratio {format_rational(block.ratio)}'
    )
    if isinstance(block, PointCluster):
        return f'(plim {geometry} :body {_serialize_points(block.body)})'
    if isinstance(block, PointRamp):
        return (
            f'(pramp {geometry} :gamma {_format_ordinal(block.gamma)} '
            f':skip {block.skip} :deriv {block.deriv})'
        )
    raise TypeError(block)


def _serialize_points(blocks):
    return '[' + ' '.join(_serialize_point(block) for block in blocks) + ']'


def serialize_points(points):
    return f'(points {_serialize_points(points.blocks)})'


def _serialize_pairs(pairs):
    return '[' + ' '.join(f'({source} {target})' for source, target in pairs) + ']'


def serialize_isometry(phi):
    if isinstance(phi, Identity):
        return '(id)'
    if isinstance(phi, Reflect):
        return '(reflect)'
    if isinstance(phi, Translate):
        return f'(translate {format_rational(phi.r)})'
    if isinstance(phi, BranchSwap):
        return f'(branch-swap {serialize(phi.a)})'
    if isinstance(phi, DirPerm):
        return f'(dir-perm {serialize(phi.x)} :map {_serialize_pairs(phi.sigma)})'
    if isinstance(phi, Relabel):
        return f'(relabel :map {_serialize_pairs(phi.sigma)})'
    if isinstance(phi, Compose):
        parts = ['compose'] + [serialize_isometry(item) for item in phi.items]
        return '(' + ' '.join(parts) + ')'
    raise TypeError(phi)

