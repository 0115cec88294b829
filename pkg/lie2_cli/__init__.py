from pathlib import Path
import logging
from typing import Dict, Optional

from .documents import SCHEMA_VERSION, Document, DocumentError, load_document, parse_document, write_document

DEFAULT_CONFIG = {
    'LOG_LEVEL': logging.INFO,
    'OUTPUT_DIR': None,
    'CATALOG_DIR': 'docs/catalog',
    'SEED': 0,
    'SCHEMA_VERSION': SCHEMA_VERSION,
    'FULL_WITNESSES': False,
}


def create_app(config: Optional[Dict] = None) -> Dict:
    """
    组装命令行运行所需的配置，并配置一次日志

    Args:
        config: 覆盖 DEFAULT_CONFIG 的键值

    Returns:
        配置字典
    """
    project_root = Path(__file__).resolve().parent.parent
    app = dict(DEFAULT_CONFIG)
    app.update(config or {})

    # Logging - 输出到控制台
    logging.basicConfig(
        level=app['LOG_LEVEL'],
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=[
            logging.StreamHandler(),
        ]
    )
    logging.getLogger().setLevel(app['LOG_LEVEL'])

    catalog_dir = Path(app['CATALOG_DIR'])
    if not catalog_dir.is_absolute():
        catalog_dir = project_root / catalog_dir
    app['CATALOG_DIR'] = catalog_dir
    if app['OUTPUT_DIR'] is not None:
        output_dir = Path(app['OUTPUT_DIR'])
        output_dir.mkdir(parents=True, exist_ok=True)
        app['OUTPUT_DIR'] = output_dir
    return app


__all__ = [
    'DEFAULT_CONFIG', 'Document', 'DocumentError', 'create_app', 'load_document', 'parse_document',
    'write_document',
]
