import argparse
import logging
import sys

from lie2_cli import create_app
from lie2_cli.commands import BUILD_KINDS, SUITES, cmd_build, cmd_catalog, cmd_check


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description="严格 Lie 2-双代数检查工具 - 公理、上闭链、CYBE、Manin 三元组与左对称代数")
    parser.add_argument("-v", "--verbose", action="store_true",
                        help="DEBUG 日志，并在报告中列出全部反例")
    parser.add_argument("--seed", type=int, default=0,
                        help="随机语料的种子（默认：0）")
    parser.add_argument("--output-dir", type=str, default=None,
                        help="build 未给出 --out 时的输出目录")
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="对文档运行检查套件")
    check.add_argument("path", type=str, help="JSON 文档路径")
    check.add_argument("--suite", required=True, choices=sorted(SUITES), help="检查套件")
    check.add_argument("--out", type=str, default=None, help="报告输出路径（默认打印到标准输出）")
    check.add_argument("--format", dest="output_format", choices=("json", "table"), default="json",
                       help="报告格式（默认：json）")

    build = sub.add_parser("build", help="构造双代数或双")
    build.add_argument("kind", choices=BUILD_KINDS, help="构造类型")
    build.add_argument("path", nargs="?", default=None, help="输入文档路径")
    build.add_argument("--entry", type=str, default=None, help="分类表项名称（代替文档路径）")
    build.add_argument("--param", action="append", default=[],
                       help="分类表参数 name=value，可重复（例如 --param a=1）")
    build.add_argument("--out", type=str, default=None, help="输出文档路径")

    catalog = sub.add_parser("catalog", help="分类表：list | export <entry> <path> | sweep")
    catalog.add_argument("action", choices=("list", "export", "sweep"))
    catalog.add_argument("entry", nargs="?", default=None, help="分类表项名称（export all 导出全部）")
    catalog.add_argument("path", nargs="?", default=None, help="导出路径")
    catalog.add_argument("--out", type=str, default=None, help="sweep 报告输出路径")
    catalog.add_argument("--format", dest="output_format", choices=("json", "table"), default="json")
    return parser


def main(argv=None) -> int:
    """主函数"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse 的用法错误统一为退出码 2
        return 0 if e.code == 0 else 2

    app = create_app({
        'LOG_LEVEL': logging.DEBUG if args.verbose else logging.INFO,
        'OUTPUT_DIR': args.output_dir,
        'SEED': args.seed,
        'FULL_WITNESSES': args.verbose,
    })

    if args.command == "check":
        return cmd_check(app, args.path, args.suite, out=args.out, output_format=args.output_format)
    if args.command == "build":
        return cmd_build(app, args.kind, path=args.path, entry=args.entry, params=args.param, out=args.out)
    return cmd_catalog(app, args.action, entry=args.entry, path=args.path, out=args.out,
                       output_format=args.output_format)


if __name__ == '__main__':
    sys.exit(main())
