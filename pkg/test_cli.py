"""
命令行：check / build / catalog 的退出码、报告与文档往返
"""

import json

import pytest

from app import main
from lie2_cli import load_document, parse_document
from lie2_cli.commands import catalog_frame, catalog_sweep, cmd_build, cmd_catalog, cmd_check, parse_params, run_suite
from lie2_cli.documents import (
    DocumentError, catalog_document, dumps_document, serialize_document, symplectic_document, write_document,
)
from lie2_core import arrays_equal
from prelie_algebra import CATALOG
from strict_lie2 import LieAlgebra


def _report(path):
    return json.loads(path.read_text(encoding='utf-8'))


def _checks(data):
    return {c['name']: c for c in data['checks']}


def test_check_n3_bialgebra_passes(docs_dir, tmp_path):
    out = tmp_path / 'report.json'
    code = main(['check', str(docs_dir / 'n3_bialgebra.json'), '--suite', 'bialgebra', '--out', str(out)])
    assert code == 0
    data = _report(out)
    assert data['passed'] is True
    assert data['suite'] == 'bialgebra'
    assert data['document'] == 'n3_bialgebra'
    names = [c['name'] for c in data['checks']]
    assert names == sorted(names)
    assert set(data) == {'schema_version', 'suite', 'document', 'passed', 'checks', 'timing_seconds'}


def test_check_abelian_lie2(docs_dir, app):
    assert cmd_check(app, str(docs_dir / 'abelian.json'), 'lie2') == 0


def test_check_mutated_r_fails_cond_c(docs_dir, app, tmp_path):
    """e1⊗e1* 的系数改为 2 后 (d⊗1 - 1⊗d)r ≠ 0"""
    out = tmp_path / 'cybe.json'
    assert cmd_check(app, str(docs_dir / 'n3_mutated.json'), 'cybe', out=str(out)) == 1
    checks = _checks(_report(out))
    assert checks['cond_c']['passed'] is False
    assert checks['cond_c']['witness']['basis'] == ['r']
    assert 'signed_exchange_stable' in checks


@pytest.mark.parametrize("suite", ['matched-pair', 'manin', 'master', 'lie2'])
def test_other_suites_on_n3_bialgebra(docs_dir, app, suite, tmp_path):
    assert cmd_check(app, str(docs_dir / 'n3_bialgebra.json'), suite, out=str(tmp_path / f"{suite}.json")) == 0


def test_check_report_is_deterministic(docs_dir, app, tmp_path):
    first, second = tmp_path / 'a.json', tmp_path / 'b.json'
    for out in (first, second):
        assert cmd_check(app, str(docs_dir / 'n3_bialgebra.json'), 'bialgebra', out=str(out)) == 0
    a, b = _report(first), _report(second)
    a.pop('timing_seconds')
    b.pop('timing_seconds')
    assert a == b


def test_check_table_format(docs_dir, app, tmp_path):
    out = tmp_path / 'cybe.txt'
    assert cmd_check(app, str(docs_dir / 'n3_mutated.json'), 'cybe', out=str(out), output_format='table') == 1
    text = out.read_text(encoding='utf-8')
    assert 'cond_c' in text
    assert '未通过' in text


def test_build_from_prelie_then_check(docs_dir, app, tmp_path):
    """--entry N3 --param a=1 重建 n3_bialgebra.json 的全部系数表"""
    out = tmp_path / 'n3.json'
    code = main(['build', 'from-prelie', '--entry', 'N3', '--param', 'a=1', '--out', str(out)])
    assert code == 0
    built, stored = load_document(out), load_document(docs_dir / 'n3_bialgebra.json')
    assert built.name == 'N3[a=1]-bialgebra'
    assert set(built.tables) == set(stored.tables)
    for name in stored.tables:
        assert arrays_equal(built.tables[name], stored.tables[name]), name
    assert cmd_check(app, str(out), 'bialgebra') == 0


def test_build_uses_output_dir(app):
    assert cmd_build(app, 'from-prelie', entry='A1') == 0
    assert (app['OUTPUT_DIR'] / 'A1-bialgebra.json').exists()


def test_build_symplectic_double(app, tmp_path):
    out = tmp_path / 'double.json'
    assert cmd_build(app, 'symplectic-double', entry='1d', out=str(out)) == 0
    doc = load_document(out)
    assert doc.dimensions == {'g0': 2, 'g-1': 2}
    assert doc.labels['g-1'] == ('f1', 'f1*')
    assert cmd_check(app, str(out), 'bialgebra') == 0


def test_build_double_then_manin(docs_dir, app, tmp_path):
    out = tmp_path / 'n3-double.json'
    assert cmd_build(app, 'double', path=str(docs_dir / 'n3_bialgebra.json'), out=str(out)) == 0
    doc = load_document(out)
    assert doc.kind == 'lie2'
    assert doc.dimensions == {'g0': 4, 'g-1': 4}
    assert doc.double_of == {'g0': 2, 'g-1': 2}
    assert doc.table('form').shape == (8, 8)
    assert cmd_check(app, str(out), 'manin') == 0
    assert cmd_check(app, str(out), 'lie2') == 0


def test_build_errors(docs_dir, app, tmp_path):
    assert cmd_build(app, 'from-prelie', entry='bogus') == 2
    assert cmd_build(app, 'from-prelie', entry='N3', params=['z=1']) == 2
    assert cmd_build(app, 'from-prelie', entry='N3', params=['a']) == 2
    assert cmd_build(app, 'from-prelie') == 2
    assert cmd_build(app, 'double') == 2
    assert cmd_build(app, 'unknown', entry='N3') == 2
    # N5 的 d 不反对称
    assert cmd_build(app, 'from-prelie', entry='N5', params=['a=1'], out=str(tmp_path / 'n5.json')) == 1


def test_parse_params():
    params = parse_params(['a=1', 'k = 2/3'])
    assert params['a'] == 1
    assert str(params['k']) == '2/3'
    with pytest.raises(DocumentError):
        parse_params(['k=0.5'])


def test_catalog_export_matches_golden(docs_dir, app, tmp_path):
    out = tmp_path / 'N3.json'
    assert cmd_catalog(app, 'export', entry='N3', path=str(out)) == 0
    assert out.read_bytes() == (docs_dir / 'catalog' / 'N3.json').read_bytes()


@pytest.mark.parametrize("name", sorted(CATALOG))
def test_catalog_golden_files(docs_dir, name):
    golden = (docs_dir / 'catalog' / f"{name}.json").read_text(encoding='utf-8')
    assert dumps_document(catalog_document(CATALOG[name])) == golden
    assert load_document(docs_dir / 'catalog' / f"{name}.json") == catalog_document(CATALOG[name])


def test_catalog_export_all(docs_dir, tmp_path):
    assert main(['catalog', 'export', 'all', str(tmp_path / 'catalog')]) == 0
    for name in CATALOG:
        exported = (tmp_path / 'catalog' / f"{name}.json").read_bytes()
        assert exported == (docs_dir / 'catalog' / f"{name}.json").read_bytes()


def test_catalog_errors(app):
    assert cmd_catalog(app, 'export', entry='bogus') == 2
    assert cmd_catalog(app, 'export') == 2
    assert cmd_catalog(app, 'shuffle') == 2


def test_catalog_list(app, capsys):
    assert cmd_catalog(app, 'list') == 0
    text = capsys.readouterr().out
    for name in CATALOG:
        assert name in text
    assert len(catalog_frame()) == 11


def test_catalog_sweep_small():
    report = catalog_sweep(seed=1, random_count=5, names=['N3', 'A1'])
    assert report.passed, report.failed()
    assert 'N3.symplectic_double' in report
    assert 'A2.symplectic_double' not in report
    assert any(name.startswith('N3.signed_exchange_stable[') for name in report.results)


def test_prelie_suite_on_catalog_document(docs_dir, app):
    assert cmd_check(app, str(docs_dir / 'catalog' / 'N3.json'), 'prelie') == 0
    assert cmd_check(app, str(docs_dir / 'catalog' / 'A2.json'), 'bialgebra') == 0


def test_symplectic_document(app, tmp_path):
    g = LieAlgebra([[[0, 0], [0, -1]], [[0, 1], [0, 0]]])
    path = write_document(symplectic_document(g, [[0, 1], [-1, 0]], name='affine'), tmp_path / 'affine.json')
    assert cmd_check(app, str(path), 'symplectic') == 0


def test_kind_suite_mismatch(docs_dir, app):
    assert cmd_check(app, str(docs_dir / 'abelian.json'), 'prelie') == 2
    assert cmd_check(app, str(docs_dir / 'abelian.json'), 'manin') == 2
    with pytest.raises(DocumentError):
        run_suite(load_document(docs_dir / 'abelian.json'), 'bogus')


def test_bad_documents(app, tmp_path):
    missing = tmp_path / 'missing.json'
    assert cmd_check(app, str(missing), 'lie2') == 2
    broken = tmp_path / 'broken.json'
    broken.write_text('{"kind": ', encoding='utf-8')
    assert cmd_check(app, str(broken), 'lie2') == 2


def test_schema_rejects_floats_and_extra_keys(docs_dir):
    data = json.loads((docs_dir / 'abelian.json').read_text(encoding='utf-8'))
    data['tables']['d'] = [["0.5"], ["0"]]
    with pytest.raises(DocumentError):
        parse_document(data)
    data = json.loads((docs_dir / 'abelian.json').read_text(encoding='utf-8'))
    data['extra'] = 1
    with pytest.raises(DocumentError):
        parse_document(data)
    data = json.loads((docs_dir / 'abelian.json').read_text(encoding='utf-8'))
    data['tables']['d'] = [["1", "0"]]
    with pytest.raises(DocumentError):
        parse_document(data)
    del data['tables']['d']
    with pytest.raises(DocumentError):
        parse_document(data)


@pytest.mark.parametrize("doc_name", ['n3_bialgebra.json', 'n3_mutated.json', 'abelian.json'])
def test_document_round_trip(docs_dir, doc_name):
    doc = load_document(docs_dir / doc_name)
    assert parse_document(serialize_document(doc)) == doc
    assert dumps_document(doc) == (docs_dir / doc_name).read_text(encoding='utf-8')


def test_usage_errors_exit_2():
    assert main([]) == 2
    assert main(['check', 'x.json']) == 2
    assert main(['check', 'x.json', '--suite', 'nope']) == 2
