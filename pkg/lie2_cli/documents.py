"""
JSON 文档：读写、schema 校验以及与代数对象之间的转换

所有系数都是 "p/q" 形式的有理数字符串，不允许浮点数
"""

import json
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Dict, Optional, Sequence, Tuple

import numpy as np
from jsonschema import Draft202012Validator
from jsonschema.exceptions import best_match

from lie2_core import Lie2Error, TensorElement, arrays_equal, as_rational_array, fmt, fmt_array, to_fraction
from lie2_cohomology import CocyclePair
from lie2_bialgebra import RMatrixData
from prelie_algebra import CatalogEntry, DMap, LeftSymmetricAlgebra
from strict_lie2 import LieAlgebra, StrictLie2Algebra

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1
KINDS = ('lie2', 'prelie', 'bialgebra', 'rmatrix', 'symplectic')
GRADED_KINDS = ('lie2', 'bialgebra', 'rmatrix')
RATIONAL_PATTERN = r'^-?\d+(/\d+)?$'

ALL_TABLES = (
    'd', 'bracket00', 'bracket01', 'form',
    'delta0_b0m', 'delta0_bm0', 'delta1',
    'r_b0m', 'r_bm0', 'frak_r',
    'product', 'M',
    'bracket', 'omega',
)

_DIM = {'type': 'integer', 'minimum': 0}
_LABELS = {'type': 'array', 'items': {'type': 'string'}}

SCHEMA = {
    '$schema': 'https://json-schema.org/draft/2020-12/schema',
    'type': 'object',
    'additionalProperties': False,
    'required': ['schema_version', 'kind', 'dimensions', 'tables'],
    'properties': {
        'schema_version': {'const': SCHEMA_VERSION},
        'kind': {'enum': list(KINDS)},
        'name': {'type': 'string'},
        'source': {'type': 'string'},
        'dimensions': {
            'type': 'object',
            'additionalProperties': False,
            'properties': {'g0': _DIM, 'g-1': _DIM, 'n': _DIM},
        },
        'labels': {
            'type': 'object',
            'additionalProperties': False,
            'properties': {'g0': _LABELS, 'g-1': _LABELS},
        },
        'parameters': {
            'type': 'object',
            'additionalProperties': {'$ref': '#/$defs/rational'},
        },
        'double_of': {
            'type': 'object',
            'additionalProperties': False,
            'required': ['g0', 'g-1'],
            'properties': {'g0': _DIM, 'g-1': _DIM},
        },
        'tables': {
            'type': 'object',
            'propertyNames': {'enum': list(ALL_TABLES)},
            'additionalProperties': {'$ref': '#/$defs/table'},
        },
    },
    '$defs': {
        'rational': {'type': 'string', 'pattern': RATIONAL_PATTERN},
        'table': {
            'type': 'array',
            'items': {'anyOf': [{'$ref': '#/$defs/rational'}, {'$ref': '#/$defs/table'}]},
        },
    },
    'allOf': [
        {
            'if': {'properties': {'kind': {'enum': list(GRADED_KINDS)}}},
            'then': {'properties': {'dimensions': {'required': ['g0', 'g-1']}}},
        },
        {
            'if': {'properties': {'kind': {'enum': ['prelie', 'symplectic']}}},
            'then': {'properties': {'dimensions': {'required': ['n']}}},
        },
    ],
}

_VALIDATOR = Draft202012Validator(SCHEMA)


class DocumentError(Lie2Error):
    """文档无法解析、不符合 schema、或与所选检查不匹配"""
    pass


def table_shapes(kind: str, dims: Dict[str, int]) -> Dict[str, Tuple[Tuple[int, ...], bool]]:
    """
    每种文档允许的系数表及其形状

    Returns:
        {表名: (形状, 是否必需)}
    """
    if kind in GRADED_KINDS:
        n0, n1 = dims['g0'], dims['g-1']
        shapes = {
            'd': ((n0, n1), True),
            'bracket00': ((n0, n0, n0), True),
            'bracket01': ((n0, n1, n1), True),
        }
        if kind == 'lie2':
            shapes['form'] = ((n0 + n1, n0 + n1), False)
        elif kind == 'bialgebra':
            shapes['delta0_b0m'] = ((n0, n0, n1), True)
            shapes['delta0_bm0'] = ((n0, n1, n0), True)
            shapes['delta1'] = ((n1, n1, n1), True)
        else:
            shapes['r_b0m'] = ((n0, n1), True)
            shapes['r_bm0'] = ((n1, n0), True)
            shapes['frak_r'] = ((n1, n1), False)
        return shapes
    n = dims['n']
    if kind == 'prelie':
        return {'product': ((n, n, n), True), 'M': ((n, n), False)}
    return {'bracket': ((n, n, n), True), 'omega': ((n, n), True)}


@dataclass(eq=False)
class Document:
    kind: str
    dimensions: Dict[str, int]
    tables: Dict[str, np.ndarray]
    labels: Dict[str, Tuple[str, ...]] = field(default_factory=dict)
    name: str = ''
    source: str = ''
    parameters: Dict[str, Fraction] = field(default_factory=dict)
    double_of: Optional[Dict[str, int]] = None
    schema_version: int = SCHEMA_VERSION

    def __eq__(self, other) -> bool:
        if not isinstance(other, Document):
            return NotImplemented
        same_meta = (
            (self.kind, self.dimensions, self.labels, self.name, self.source, self.parameters,
             self.double_of, self.schema_version)
            == (other.kind, other.dimensions, other.labels, other.name, other.source, other.parameters,
                other.double_of, other.schema_version)
        )
        return (same_meta and set(self.tables) == set(other.tables)
                and all(arrays_equal(self.tables[k], other.tables[k]) for k in self.tables))

    __hash__ = None

    def table(self, name: str) -> Optional[np.ndarray]:
        return self.tables.get(name)

    def describe(self) -> str:
        return self.name or self.kind


# ---------------------------------------------------------------------------
# 读写
# ---------------------------------------------------------------------------

def parse_document(data) -> Document:
    """
    校验并解析 JSON 对象

    Raises:
        DocumentError: schema 不符、系数不是有理数、缺少表或形状错误
    """
    error = best_match(_VALIDATOR.iter_errors(data))
    if error is not None:
        where = '/'.join(str(p) for p in error.absolute_path) or '/'
        raise DocumentError(f"文档不符合 schema ({where}): {error.message}")

    kind = data['kind']
    dims = dict(data['dimensions'])
    shapes = table_shapes(kind, dims)
    for name in data['tables']:
        if name not in shapes:
            raise DocumentError(f"{kind} 文档不接受系数表 {name}")
    tables = {}
    for name, (shape, required) in shapes.items():
        if name not in data['tables']:
            if required:
                raise DocumentError(f"{kind} 文档缺少系数表 {name}")
            continue
        try:
            tables[name] = as_rational_array(data['tables'][name], shape)
        except Lie2Error as e:
            raise DocumentError(f"系数表 {name}: {e}") from e

    labels = {k: tuple(v) for k, v in data.get('labels', {}).items()}
    try:
        parameters = {k: to_fraction(v) for k, v in data.get('parameters', {}).items()}
    except Lie2Error as e:
        raise DocumentError(f"参数: {e}") from e
    doc = Document(
        kind=kind, dimensions=dims, tables=tables, labels=labels,
        name=data.get('name', ''), source=data.get('source', ''),
        parameters=parameters, double_of=data.get('double_of'),
        schema_version=data['schema_version'],
    )
    logger.debug(f"[Document] 解析 {doc.describe()} ({kind}, {dims})")
    return doc


def load_document(path) -> Document:
    """
    Raises:
        DocumentError: 文件无法读取或不是合法 JSON
    """
    path = Path(path)
    try:
        text = path.read_text(encoding='utf-8')
    except OSError as e:
        raise DocumentError(f"无法读取文档 {path}: {e}") from e
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(f"{path} 不是合法 JSON: {e}") from e
    return parse_document(data)


def serialize_document(doc: Document) -> Dict:
    out = {
        'schema_version': doc.schema_version,
        'kind': doc.kind,
        'dimensions': dict(doc.dimensions),
        'tables': {name: fmt_array(arr) for name, arr in doc.tables.items()},
    }
    if doc.name:
        out['name'] = doc.name
    if doc.source:
        out['source'] = doc.source
    if doc.labels:
        out['labels'] = {k: list(v) for k, v in doc.labels.items()}
    if doc.parameters:
        out['parameters'] = {k: fmt(v) for k, v in doc.parameters.items()}
    if doc.double_of is not None:
        out['double_of'] = dict(doc.double_of)
    return out


def dumps_document(doc: Document) -> str:
    return json.dumps(serialize_document(doc), sort_keys=True, indent=2, ensure_ascii=False) + '\n'


def write_document(doc: Document, path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dumps_document(doc), encoding='utf-8')
    logger.info(f"[Document] 已写出 {doc.describe()} -> {path}")
    return path


# ---------------------------------------------------------------------------
# 文档 → 代数对象
# ---------------------------------------------------------------------------

def _require_kind(doc: Document, kinds: Sequence[str]):
    if doc.kind not in kinds:
        raise DocumentError(f"需要 {'/'.join(kinds)} 文档, 实际为 {doc.kind}")


def document_lie2(doc: Document) -> StrictLie2Algebra:
    _require_kind(doc, GRADED_KINDS)
    return StrictLie2Algebra.from_arrays(
        doc.tables['d'], doc.tables['bracket00'], doc.tables['bracket01'],
        labels0=doc.labels.get('g0', ()), labels_m1=doc.labels.get('g-1', ()),
    )


def document_bialgebra(doc: Document) -> Tuple[StrictLie2Algebra, CocyclePair]:
    _require_kind(doc, ('bialgebra',))
    L = document_lie2(doc)
    n0, n1 = L.n0, L.n1
    b0m, bm0, d1 = doc.tables['delta0_b0m'], doc.tables['delta0_bm0'], doc.tables['delta1']
    delta0 = tuple(TensorElement.from_blocks(n0, n1, b0m=b0m[i], bm0=bm0[i]) for i in range(n0))
    delta1 = tuple(TensorElement.from_blocks(n0, n1, bmm=d1[a]) for a in range(n1))
    return L, CocyclePair(n0, n1, delta0, delta1)


def document_rmatrix(doc: Document) -> Tuple[StrictLie2Algebra, RMatrixData]:
    _require_kind(doc, ('rmatrix',))
    L = document_lie2(doc)
    r = TensorElement.from_blocks(L.n0, L.n1, b0m=doc.tables['r_b0m'], bm0=doc.tables['r_bm0'])
    frak = doc.table('frak_r')
    frak_r = TensorElement.from_blocks(L.n0, L.n1, bmm=frak) if frak is not None else None
    return L, RMatrixData.of(r, frak_r)


def document_prelie(doc: Document) -> Tuple[LeftSymmetricAlgebra, Optional[DMap]]:
    _require_kind(doc, ('prelie',))
    A = LeftSymmetricAlgebra(doc.tables['product'], doc.labels.get('g0', ()))
    M = doc.table('M')
    return A, (DMap(M) if M is not None else None)


def document_symplectic(doc: Document) -> Tuple[LieAlgebra, np.ndarray]:
    _require_kind(doc, ('symplectic',))
    return LieAlgebra(doc.tables['bracket'], doc.labels.get('g0', ())), doc.tables['omega']


# ---------------------------------------------------------------------------
# 代数对象 → 文档
# ---------------------------------------------------------------------------

def _graded_labels(L: StrictLie2Algebra) -> Dict[str, Tuple[str, ...]]:
    return {'g0': L.space.labels0, 'g-1': L.space.labels_m1}


def lie2_document(L: StrictLie2Algebra, name: str = '', source: str = '', form=None,
                  double_of: Optional[Dict[str, int]] = None) -> Document:
    tables = {'d': L.D, 'bracket00': L.bracket00, 'bracket01': L.bracket01}
    if form is not None:
        tables['form'] = as_rational_array(form)
    return Document('lie2', {'g0': L.n0, 'g-1': L.n1}, tables, labels=_graded_labels(L),
                    name=name, source=source, double_of=double_of)


def bialgebra_document(L: StrictLie2Algebra, c: CocyclePair, name: str = '', source: str = '') -> Document:
    n0, n1 = L.n0, L.n1
    tables = {
        'd': L.D, 'bracket00': L.bracket00, 'bracket01': L.bracket01,
        'delta0_b0m': as_rational_array([t.b0m for t in c.delta0], (n0, n0, n1)),
        'delta0_bm0': as_rational_array([t.bm0 for t in c.delta0], (n0, n1, n0)),
        'delta1': as_rational_array([t.bmm for t in c.delta1], (n1, n1, n1)),
    }
    return Document('bialgebra', {'g0': n0, 'g-1': n1}, tables, labels=_graded_labels(L),
                    name=name, source=source)


def rmatrix_document(L: StrictLie2Algebra, rm: RMatrixData, name: str = '', source: str = '') -> Document:
    tables = {
        'd': L.D, 'bracket00': L.bracket00, 'bracket01': L.bracket01,
        'r_b0m': rm.r.b0m, 'r_bm0': rm.r.bm0,
    }
    if not rm.frak_r.is_zero():
        tables['frak_r'] = rm.frak_r.bmm
    return Document('rmatrix', {'g0': L.n0, 'g-1': L.n1}, tables, labels=_graded_labels(L),
                    name=name, source=source)


def prelie_document(A: LeftSymmetricAlgebra, d=None, name: str = '', source: str = '',
                    parameters: Optional[Dict[str, Fraction]] = None) -> Document:
    tables = {'product': A.product}
    if d is not None:
        tables['M'] = DMap.of(d, A.dim).matrix
    return Document('prelie', {'n': A.dim}, tables, labels={'g0': A.labels}, name=name, source=source,
                    parameters=dict(parameters or {}))


def symplectic_document(g: LieAlgebra, omega, name: str = '', source: str = '') -> Document:
    return Document('symplectic', {'n': g.dim},
                    {'bracket': g.structure, 'omega': as_rational_array(omega, (g.dim, g.dim))},
                    labels={'g0': g.labels}, name=name, source=source)


def catalog_document(entry: CatalogEntry) -> Document:
    """分类表项在缺省参数下的 prelie 文档（d 取 0，不写 M）"""
    return prelie_document(entry.algebra(), name=entry.name, source=entry.note, parameters=entry.params)
