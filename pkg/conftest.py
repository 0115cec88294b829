"""
测试共用的夹具：N3 平面代数（带非零 d）、分类表实例、文档目录与命令行配置
"""

import logging
from pathlib import Path

import pytest

from lie2_cli import create_app
from prelie_algebra import CATALOG, DMap, build_bialgebra_from_prelie, catalog_bialgebras, prelie_lie2
from strict_lie2 import StrictLie2Algebra

PROJECT_ROOT = Path(__file__).resolve().parent
DOCS_DIR = PROJECT_ROOT / 'docs'

# d(e1*) = -e2, d(e2*) = e1
N3_M = [[0, -1], [1, 0]]


@pytest.fixture
def n3_algebra():
    """e1∘e1 = e1, e2∘e1 = e2"""
    return CATALOG['N3'].algebra()


@pytest.fixture
def n3_d():
    return DMap(N3_M)


@pytest.fixture
def n3_plane(n3_algebra, n3_d):
    return prelie_lie2(n3_algebra, n3_d)


@pytest.fixture
def n3_bialgebra(n3_algebra, n3_d):
    return build_bialgebra_from_prelie(n3_algebra, n3_d)


@pytest.fixture
def abelian_lie2():
    return StrictLie2Algebra.abelian(2, 1, D=[[1], [0]])


@pytest.fixture(scope='session')
def catalog_bases():
    return catalog_bialgebras()


@pytest.fixture
def docs_dir():
    return DOCS_DIR


@pytest.fixture
def app(tmp_path):
    return create_app({'LOG_LEVEL': logging.DEBUG, 'OUTPUT_DIR': tmp_path / 'out'})
