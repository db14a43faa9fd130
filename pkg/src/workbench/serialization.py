#!/usr/bin/env python3
"""
Serialization for PRISMA
Text forms for words and simplices, JSON records for chains, complexity matrices and vertex tables.
Chain terms are written in canonical order so output is byte-stable.
"""

import json
from typing import Any, Dict, List, Optional, Tuple, Union

from src.combinatorics.permutations import Permutation
from src.combinatorics.surjections import Surjection
from src.filtration.complexity import CellDescriptor, ComplexityMatrix
from src.prisms.prism import VertexCoord
from src.simplicial.bar_construction import EChain, Simplex, require_nondegenerate
from src.simplicial.chain import Chain
from src.surjection_complex.differential import XChain
from src.utils.errors import InvalidInputError, ParseError

SPACE_TYPES = {'e': EChain, 'x': XChain}


def _parse_word(text: str, offset: int = 0) -> Tuple[int, ...]:
    """Parse "1,2,1" (optionally parenthesised) into integers; offset locates text in the full input"""
    start = 0
    end = len(text)
    while start < end and text[start].isspace():
        start += 1
    while end > start and text[end - 1].isspace():
        end -= 1
    if start < end and text[start] == '(':
        if text[end - 1] != ')':
            raise ParseError("unbalanced parenthesis", offset + start)
        start, end = start + 1, end - 1
    if start >= end:
        raise ParseError("empty word", offset + start)

    values = []
    position = start
    for part in text[start:end].split(','):
        token = part.strip()
        if not token.isdigit():
            column = offset + position + (len(part) - len(part.lstrip()))
            raise ParseError(f"expected a positive integer, got '{token}'", column)
        values.append(int(token))
        position += len(part) + 1
    return tuple(values)


def decode_permutation(text: str) -> Permutation:
    return Permutation(_parse_word(text))


def decode_surjection(text: str, arity: Optional[int] = None) -> Surjection:
    """Arity defaults to the largest letter"""
    word = _parse_word(text)
    return Surjection(word, max(word) if arity is None else arity)


def decode_simplex(text: str) -> Simplex:
    """Vertices separated by ';', e.g. "1,2,3;3,2,1" """
    vertices = []
    offset = 0
    for part in text.split(';'):
        vertices.append(Permutation(_parse_word(part, offset)))
        offset += len(part) + 1
    return require_nondegenerate(Simplex(tuple(vertices)))


def encode_word(word) -> str:
    return ','.join(map(str, word))


def encode_permutation(w: Permutation) -> str:
    return encode_word(w.word)


def encode_surjection(u: Surjection) -> str:
    return encode_word(u.word)


def encode_simplex(s: Simplex) -> str:
    return ';'.join(encode_word(w) for w in s.words)


def decode_cellular(text: str) -> Union[Surjection, Simplex]:
    """A simplex when the text has ';', a surjection otherwise"""
    return decode_simplex(text) if ';' in text else decode_surjection(text)


def space_of(c: Chain) -> str:
    for space, chain_type in SPACE_TYPES.items():
        if type(c) is chain_type:
            return space
    raise InvalidInputError(f"no serialized form for {type(c).__name__}")


def _encode_basis(basis) -> Any:
    if isinstance(basis, Simplex):
        return [list(w) for w in basis.words]
    return list(basis.word)


def chain_to_record(c: Chain) -> Dict[str, Any]:
    return {
        'space': space_of(c),
        'arity': c.arity,
        'degree': c.degree,
        'terms': [{'coefficient': coefficient, 'basis': _encode_basis(basis)} for basis, coefficient in c],
    }


def encode_chain(c: Chain) -> str:
    return json.dumps(chain_to_record(c))


def _require(record: Dict, key: str, kind: type):
    value = record.get(key)
    if not isinstance(value, kind) or isinstance(value, bool) and kind is not bool:
        raise ParseError(f"chain record field '{key}' must be {kind.__name__}")
    return value


def chain_from_record(record: Dict[str, Any]) -> Chain:
    if not isinstance(record, dict):
        raise ParseError("chain record must be an object")
    space = _require(record, 'space', str)
    if space not in SPACE_TYPES:
        raise ParseError(f"unknown space '{space}'")
    arity = _require(record, 'arity', int)
    degree = _require(record, 'degree', int)
    terms = []
    for index, term in enumerate(_require(record, 'terms', list)):
        if not isinstance(term, dict):
            raise ParseError(f"term {index} must be an object")
        coefficient = _require(term, 'coefficient', int)
        basis = term.get('basis')
        try:
            if space == 'e':
                element = require_nondegenerate(Simplex.from_words(basis))
            else:
                element = Surjection(tuple(basis), arity)
        except TypeError:
            raise ParseError(f"term {index} has a malformed basis") from None
        terms.append((element, coefficient))
    return SPACE_TYPES[space](arity, degree, terms)


def decode_chain(text: str) -> Chain:
    try:
        record = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid chain JSON: {e.msg}", e.pos) from None
    return chain_from_record(record)


def decode_input(text: str, space: str) -> Chain:
    """A JSON chain record, or a single basis element of the given space"""
    if space not in SPACE_TYPES:
        raise InvalidInputError(f"unknown space '{space}'")
    if text.lstrip().startswith('{'):
        c = decode_chain(text)
        if space_of(c) != space:
            raise InvalidInputError(f"chain record is in space '{space_of(c)}', expected '{space}'")
        return c
    basis = decode_simplex(text) if space == 'e' else decode_surjection(text)
    return SPACE_TYPES[space].of(basis)


def complexity_records(mu: ComplexityMatrix) -> List[Dict[str, int]]:
    return mu.records()


def cell_record(cell: CellDescriptor) -> Dict[str, Any]:
    return {
        'complexity': cell.mu.records(),
        'last_orientation': [{'i': i, 'j': j, 'orientation': o.value} for (i, j), o in cell.last_orientation],
    }


def vertex_table_records(table: List[Tuple[VertexCoord, Permutation]]) -> List[Dict[str, List[int]]]:
    return [{'coords': list(coords), 'permutation': list(w.word)} for coords, w in table]
