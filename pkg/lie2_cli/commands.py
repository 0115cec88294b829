"""
命令实现：check、build、catalog
每个命令返回退出码（0 通过，1 数学检查失败，2 输入或用法错误）
"""

import json
import logging
import time
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import pandas as pd

from lie2_core import (
    AxiomError, CheckReport, DegreeError, ShapeError, SingularError, arrays_equal, fmt, to_fraction,
)
from lie2_bialgebra import (
    RMatrixData, StrictLie2Bialgebra, build_double, cybe_check, manin_check, manin_from_double, matched_pair_check,
    signed_exchange_changes_verdict, standard_matched_pair,
)
from big_bracket import encode, master_check
from prelie_algebra import (
    CATALOG, CatalogSearch, DMap, LeftSymmetricAlgebra, admissible_d_check, bilinear_from_d,
    build_bialgebra_from_prelie, canonical_r, canonical_r_cybe, catalog_entry, catalog_fidelity, check_left_symmetric,
    invariance_check, invertible_d_verdicts, prelie_lie2, sub_adjacent, symplectic_check, symplectic_double,
    symplectic_to_prelie,
)
from strict_lie2 import check_strict_axioms

from .documents import (
    Document, DocumentError, bialgebra_document, catalog_document, document_bialgebra, document_lie2,
    document_prelie, document_rmatrix, document_symplectic, dumps_document, lie2_document, load_document,
    write_document,
)

logger = logging.getLogger(__name__)

BANNER = "=" * 80

# 每个检查套件接受的文档种类
SUITES: Dict[str, Tuple[str, ...]] = {
    'lie2': ('lie2', 'bialgebra', 'rmatrix'),
    'bialgebra': ('bialgebra', 'prelie'),
    'cybe': ('rmatrix', 'prelie'),
    'matched-pair': ('bialgebra',),
    'manin': ('bialgebra', 'lie2'),
    'master': ('bialgebra', 'lie2'),
    'prelie': ('prelie',),
    'symplectic': ('symplectic', 'prelie'),
}

BUILD_KINDS = ('from-prelie', 'symplectic-double', 'double')

INPUT_ERRORS = (DocumentError, ShapeError, DegreeError)
MATH_ERRORS = (AxiomError, SingularError)


# ---------------------------------------------------------------------------
# 检查套件
# ---------------------------------------------------------------------------

def _suite_lie2(doc: Document, full: bool) -> CheckReport:
    return check_strict_axioms(document_lie2(doc), full=full)


def _suite_bialgebra(doc: Document, full: bool) -> CheckReport:
    if doc.kind == 'bialgebra':
        L, c = document_bialgebra(doc)
        return StrictLie2Bialgebra(L, c).invariants(full=full)
    A, d = document_prelie(doc)
    report = CheckReport('Bialgebra')
    report.merge(check_left_symmetric(A, full=full), prefix='prelie.')
    if not report.passed:
        return report
    report.merge(admissible_d_check(A, d), prefix='admissible.')
    if report.passed:
        B = build_bialgebra_from_prelie(A, d)
        report.merge(B.invariants(full=full))
    return report


def _suite_cybe(doc: Document, full: bool) -> CheckReport:
    if doc.kind == 'rmatrix':
        L, rm = document_rmatrix(doc)
        report = cybe_check(L, rm, full=full)
        changed = signed_exchange_changes_verdict(L, rm)
        report.record('signed_exchange_stable', not changed, informational=True,
                      anchor='CYBE (a) verdict unchanged under the Koszul-signed exchange')
        return report
    A, d = document_prelie(doc)
    return canonical_r_cybe(A, d, full=full)


def _suite_matched_pair(doc: Document, full: bool) -> CheckReport:
    L, c = document_bialgebra(doc)
    dual, mu, mu2 = standard_matched_pair(L, c)
    return matched_pair_check(L, dual, mu, mu2, full=full)


def _suite_manin(doc: Document, full: bool) -> CheckReport:
    if doc.kind == 'bialgebra':
        L, c = document_bialgebra(doc)
        return manin_check(build_double(L, c, require_cocycle=False), full=full)
    if doc.double_of is None or doc.table('form') is None:
        raise DocumentError("manin 检查的 lie2 文档需要 form 表与 double_of")
    K = document_lie2(doc)
    T = manin_from_double(K, doc.tables['form'], doc.double_of['g0'], doc.double_of['g-1'])
    return manin_check(T, full=full)


def _suite_master(doc: Document, full: bool) -> CheckReport:
    if doc.kind == 'bialgebra':
        L, c = document_bialgebra(doc)
        return master_check(encode(L, c), full=full)
    return master_check(encode(document_lie2(doc)), full=full)


def _suite_prelie(doc: Document, full: bool) -> CheckReport:
    A, d = document_prelie(doc)
    report = CheckReport('PreLie')
    report.merge(check_left_symmetric(A, full=full))
    if report.passed and d is not None:
        report.merge(admissible_d_check(A, d), prefix='admissible.')
        if d.is_skew() and d.is_invertible():
            verdicts = invertible_d_verdicts(A, d)
            report.record('invertible_d.agree', verdicts.agree(),
                          anchor='invertible skew d: strict ⇔ B_d invariant ⇔ (g(A), B_d) symplectic')
            for name in ('strict', 'invariant', 'symplectic', 'cocycle_only'):
                report.record(f"invertible_d.{name}", getattr(verdicts, name), informational=True)
    if report.passed and doc.name in CATALOG and CATALOG[doc.name].dim == A.dim:
        report.merge(catalog_fidelity(CATALOG[doc.name]), prefix='catalog.')
    return report


def _suite_symplectic(doc: Document, full: bool) -> CheckReport:
    report = CheckReport('Symplectic')
    if doc.kind == 'symplectic':
        g, omega = document_symplectic(doc)
        report.merge(symplectic_check(g, omega))
        if report.passed:
            A = symplectic_to_prelie(g, omega)
            report.merge(check_left_symmetric(A, full=full), prefix='compatible.')
            report.record('compatible.sub_adjacent', arrays_equal(sub_adjacent(A, check=False).structure, g.structure),
                          anchor='compatible product: its sub-adjacent Lie algebra is g')
            report.merge(invariance_check(A, omega), prefix='compatible.invariance.')
        return report
    A, d = document_prelie(doc)
    if d is None:
        raise DocumentError("symplectic 检查的 prelie 文档需要 M 表")
    verdicts = invertible_d_verdicts(A, d)
    B = bilinear_from_d(A, d)
    report.merge(invariance_check(A, B), prefix='invariance.')
    report.merge(symplectic_check(sub_adjacent(A, check=False), B), prefix='symplectic.')
    report.record('equivalence', verdicts.agree(),
                  anchor='invertible skew d: strict ⇔ B_d invariant ⇔ (g(A), B_d) symplectic')
    report.record('strict', verdicts.strict, anchor='(g(A), A*, d) strict', informational=True)
    return report


SUITE_RUNNERS: Dict[str, Callable[[Document, bool], CheckReport]] = {
    'lie2': _suite_lie2,
    'bialgebra': _suite_bialgebra,
    'cybe': _suite_cybe,
    'matched-pair': _suite_matched_pair,
    'manin': _suite_manin,
    'master': _suite_master,
    'prelie': _suite_prelie,
    'symplectic': _suite_symplectic,
}


def run_suite(doc: Document, suite: str, full: bool = False) -> CheckReport:
    """
    对文档运行一个检查套件

    Raises:
        DocumentError: 未知套件或套件不接受该文档种类
        AxiomError, SingularError: 构造的前提条件不成立
    """
    if suite not in SUITES:
        raise DocumentError(f"未知的检查套件 {suite}，可选: {sorted(SUITES)}")
    if doc.kind not in SUITES[suite]:
        raise DocumentError(f"{suite} 套件不接受 {doc.kind} 文档（可接受: {', '.join(SUITES[suite])}）")
    return SUITE_RUNNERS[suite](doc, full)


# ---------------------------------------------------------------------------
# 报告
# ---------------------------------------------------------------------------

def build_report(app: Dict, suite: str, document: str, report: CheckReport, timing: float) -> Dict:
    return {
        'schema_version': app['SCHEMA_VERSION'],
        'suite': suite,
        'document': document,
        'passed': report.passed,
        'checks': report.to_list(full_witnesses=app['FULL_WITNESSES']),
        'timing_seconds': round(timing, 6),
    }


def render_report(data: Dict, output_format: str = 'json') -> str:
    if output_format == 'table':
        rows = [{
            'check': c['name'],
            'passed': c['passed'],
            'witness': ' '.join(c['witness']['basis']) if c['witness'] else '',
            'anchor': c['anchor'],
        } for c in data['checks']]
        frame = pd.DataFrame(rows, columns=['check', 'passed', 'witness', 'anchor'])
        status = '通过' if data['passed'] else '未通过'
        header = f"{BANNER}\n{data['suite']} @ {data['document']}: {status}\n{BANNER}\n"
        return header + frame.to_string(index=False) + '\n'
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + '\n'


def _emit(text: str, out: Optional[str]):
    if out:
        path = Path(out)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding='utf-8')
        logger.info(f"[Report] 已写出 {path}")
    else:
        print(text, end='')


def cmd_check(app: Dict, path: str, suite: str, out: Optional[str] = None, output_format: str = 'json') -> int:
    """读取文档、运行套件并输出报告"""
    try:
        doc = load_document(path)
        start = time.perf_counter()
        report = run_suite(doc, suite, full=app['FULL_WITNESSES'])
        elapsed = time.perf_counter() - start
    except INPUT_ERRORS as e:
        logger.error(f"[Check] 输入错误: {e}")
        return 2
    except MATH_ERRORS as e:
        logger.error(f"[Check] 前提条件不成立: {e}")
        return 1
    data = build_report(app, suite, doc.name or Path(path).name, report, elapsed)
    _emit(render_report(data, output_format), out)
    if report.passed:
        logger.info(f"[Check] {suite} 全部通过 ({len(data['checks'])} 项)")
        return 0
    logger.warning(f"[Check] {suite} 未通过: {report.failed()}")
    return 1


# ---------------------------------------------------------------------------
# build
# ---------------------------------------------------------------------------

def parse_params(pairs: Sequence[str]) -> Dict[str, object]:
    """["a=1", "k=2/3"] → {"a": Fraction(1), "k": Fraction(2, 3)}"""
    out = {}
    for item in pairs or ():
        if '=' not in item:
            raise DocumentError(f"参数应写成 name=value: {item!r}")
        key, value = item.split('=', 1)
        try:
            out[key.strip()] = to_fraction(value)
        except ValueError as e:
            raise DocumentError(f"参数 {key} 不是有理数: {value!r}") from e
    return out


def _prelie_input(path: Optional[str], entry: Optional[str],
                  params: Dict[str, object]) -> Tuple[str, LeftSymmetricAlgebra, Optional[DMap]]:
    """build 的左对称代数输入：文档路径或分类表项（带参数）"""
    if (path is None) == (entry is None):
        raise DocumentError("需要且只能给出一个输入：文档路径或 --entry")
    if path is not None:
        doc = load_document(path)
        A, d = document_prelie(doc)
        return doc.name or Path(path).stem, A, d
    try:
        item = catalog_entry(entry)
    except KeyError as e:
        raise DocumentError(str(e)) from e
    unknown = set(params) - set(item.params) - set(item.family)
    if unknown:
        raise DocumentError(f"{entry} 没有参数 {sorted(unknown)}")
    product_params = {k: v for k, v in params.items() if k in item.params}
    family_params = {k: v for k, v in params.items() if k in item.family}
    A = item.algebra(**product_params)
    d = DMap(item.d_matrix(**family_params)) if family_params else None
    tag = ','.join(f"{k}={fmt(v)}" for k, v in sorted(params.items()))
    return (f"{entry}[{tag}]" if tag else entry), A, d


def _output_path(app: Dict, out: Optional[str], name: str) -> Optional[Path]:
    if out:
        return Path(out)
    if app['OUTPUT_DIR'] is not None:
        return Path(app['OUTPUT_DIR']) / f"{name}.json"
    return None


def cmd_build(app: Dict, kind: str, path: Optional[str] = None, entry: Optional[str] = None,
              params: Sequence[str] = (), out: Optional[str] = None) -> int:
    """
    from-prelie: 左对称代数与可容许 d → 双代数文档
    symplectic-double: 左对称代数 → Â 上的双代数文档
    double: 双代数文档 → 双 𝒢⊕𝒢* 的 lie2 文档（带 S 与 double_of）
    """
    try:
        if kind not in BUILD_KINDS:
            raise DocumentError(f"未知的构造 {kind}，可选: {', '.join(BUILD_KINDS)}")
        if kind == 'double':
            if path is None:
                raise DocumentError("double 需要双代数文档路径")
            doc = load_document(path)
            L, c = document_bialgebra(doc)
            T = build_double(L, c)
            name = f"{doc.name or Path(path).stem}-double"
            result = lie2_document(T.algebra, name=name, source=f"double of {doc.name or Path(path).name}",
                                   form=T.form, double_of={'g0': L.n0, 'g-1': L.n1})
        else:
            label, A, d = _prelie_input(path, entry, parse_params(params))
            if kind == 'from-prelie':
                B = build_bialgebra_from_prelie(A, d)
                name = f"{label}-bialgebra"
            else:
                B = symplectic_double(A)
                name = f"{label}-symplectic-double"
            result = bialgebra_document(B.base, B.cocycle, name=name, source=f"{kind} of {label}")
    except INPUT_ERRORS as e:
        logger.error(f"[Build] 输入错误: {e}")
        return 2
    except MATH_ERRORS as e:
        logger.error(f"[Build] 前提条件不成立: {e}")
        return 1
    target = _output_path(app, out, name)
    if target is None:
        print(dumps_document(result), end='')
    else:
        write_document(result, target)
    logger.info(f"[Build] {kind} 完成: {name}")
    return 0


# ---------------------------------------------------------------------------
# catalog
# ---------------------------------------------------------------------------

def catalog_frame() -> pd.DataFrame:
    rows = [{
        'name': e.name,
        'dim': e.dim,
        'd_family': ','.join(sorted(e.family)) or '0',
        'params': ','.join(f"{k}={fmt(v)}" for k, v in sorted(e.params.items())),
        'note': e.note,
    } for e in CATALOG.values()]
    return pd.DataFrame(rows, columns=['name', 'dim', 'd_family', 'params', 'note'])


def catalog_sweep(seed: int = 0, random_count: int = 50, names: Optional[Sequence[str]] = None) -> CheckReport:
    """
    分类表与随机左对称代数上的整体检查：
    族的正确性、典范 r 的 CYBE 及带号交换下的结论、Â 双代数

    Args:
        seed: 随机左对称代数的种子
        random_count: 随机左对称代数的个数
        names: 只检查这些分类表项，缺省为全部
    """
    report = CheckReport('Catalog')
    entries = [catalog_entry(name) for name in names] if names is not None else list(CATALOG.values())
    for entry in entries:
        report.merge(catalog_fidelity(entry), prefix=f"{entry.name}.")
        for params in entry.parameter_grid():
            A = entry.algebra(**params)
            tag = ','.join(f"{k}={fmt(v)}" for k, v in sorted(params.items())) or '-'
            cybe = canonical_r_cybe(A)
            report.record(f"{entry.name}.canonical_r_cybe[{tag}]", cybe['cond_a'].passed and cybe['cond_b'].passed,
                          anchor='canonical r satisfies CYBE (a), (b) in g(A) ⋉ A*')
            changed = signed_exchange_changes_verdict(prelie_lie2(A), RMatrixData.of(canonical_r(A)))
            report.record(f"{entry.name}.signed_exchange_stable[{tag}]", not changed,
                          anchor='Koszul-signed σ gives the same CYBE (a) verdict')
        double = symplectic_double(entry.algebra())
        report.record(f"{entry.name}.symplectic_double", double.invariants().passed,
                      anchor='the Â construction is a strict Lie 2-bialgebra')
    search = CatalogSearch(seed=seed)
    for k, A in enumerate(search.corpus(random_count)):
        cybe = canonical_r_cybe(A)
        report.record(f"random[{k:03d}].canonical_r_cybe", cybe['cond_a'].passed and cybe['cond_b'].passed,
                      anchor='canonical r satisfies CYBE (a), (b) in g(A) ⋉ A*')
    return report


def cmd_catalog(app: Dict, action: str, entry: Optional[str] = None, path: Optional[str] = None,
                out: Optional[str] = None, output_format: str = 'json') -> int:
    """list | export <entry> <path> | sweep"""
    if action == 'list':
        print(BANNER)
        print(catalog_frame().to_string(index=False))
        print(BANNER)
        return 0
    if action == 'export':
        if not entry:
            logger.error("[Catalog] export 需要分类表项名称")
            return 2
        if entry == 'all':
            written = export_all(app, path)
            logger.info(f"[Catalog] 已导出 {len(written)} 个分类表文档")
            return 0
        try:
            doc = catalog_document(catalog_entry(entry))
        except KeyError as e:
            logger.error(f"[Catalog] {e}")
            return 2
        target = Path(path) if path else Path(app['CATALOG_DIR']) / f"{entry}.json"
        write_document(doc, target)
        return 0
    if action == 'sweep':
        start = time.perf_counter()
        report = catalog_sweep(seed=app['SEED'])
        data = build_report(app, 'catalog-sweep', 'catalog', report, time.perf_counter() - start)
        _emit(render_report(data, output_format), out)
        return 0 if report.passed else 1
    logger.error(f"[Catalog] 未知操作 {action}")
    return 2


def export_all(app: Dict, directory: Optional[str] = None) -> List[Path]:
    """把整个分类表写到 directory（缺省为 CATALOG_DIR）"""
    base = Path(directory) if directory else Path(app['CATALOG_DIR'])
    return [write_document(catalog_document(e), base / f"{e.name}.json") for e in CATALOG.values()]
