"""
isotropic-poly - Command Line Entry Point.

q-independence 다항식과 전등방(TI) 다항식 계산 CLI.

명령:
- indep:      I(G, x)
- qindep:     I(G, x, q) (x_q basis, Z[q] 계수)
- ti-brute:   TI(B, x) brute-force (--graphical 이면 그래프 파일을 B_G 로)
- direct-sum: 두 행렬 공간 파일의 direct sum 을 출력
- verify:     cross_validate + direct sum / 곱 검사, 모두 통과하면 종료 코드 0
- expand:     다항식 JSON 의 basis 변환 (--to) 또는 q 특수화 (--q)
- rank-loci:  rank locus 개수

종료 코드:
    0 성공, 1 검증 실패, 2 입력 오류, 3 자원 한도 초과

사용:
    isotropic-poly qindep k2.graph
    isotropic-poly verify --q 2 --named P3
    isotropic-poly qindep --format json p3.graph > p3.json
    isotropic-poly expand --to monomial --q 1 p3.json
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional, TextIO, Tuple

from pydantic import ValidationError

from .altspace.models import AltSpace
from .altspace.oracle import IsotropicSubspaceOracle
from .altspace.space import direct_sum, graphical_space
from .catalog.graph_catalog import GraphCatalog
from .engine.qindep import QIndependenceEngine
from .engine.validator import cross_validate, direct_sum_check, product_check
from .errors import BadArgs, IsotropicPolyError, TooLarge, VerificationError
from .field.gfq import field_make
from .graph.graph import Graph, empty_graph, independence_polynomial
from .interfaces.cli_models import CommandEnum, OutputFormatEnum, RunConfig
from .interfaces.formats import format_altspace, read_altspace, read_graph, write_altspace
from .interfaces.poly_codec import loads_json, render
from .poly.bivariate import Basis, from_monomial, specialize_q, to_monomial
from .settings import settings

logger = logging.getLogger(__name__)

VERSION = "1.0.0"

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_TOO_LARGE = 3


# ========== 인자 파서 ==========

def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=[f.value for f in OutputFormatEnum], default="text")
    p.add_argument("--out", help="write the result to this path instead of stdout")
    p.add_argument("--guard-limit", type=int, help="maximum number of subspaces to enumerate")
    p.add_argument("--workers", type=int, help="worker processes for brute-force enumeration")
    p.add_argument("--catalog", help="YAML file of named graphs")
    p.add_argument("-v", "--verbose", action="count", default=0)


def _add_graph_source(p: argparse.ArgumentParser) -> None:
    p.add_argument("input", nargs="?", help="graph file")
    p.add_argument("--named", help="catalog graph name instead of a file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="isotropic-poly",
        description="q-independence polynomials and totally-isotropic subspace counts",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {VERSION}")
    subparsers = parser.add_subparsers(dest="command", required=True)

    p = subparsers.add_parser("indep", help="independence polynomial I(G, x)")
    _add_graph_source(p)
    _add_common(p)

    p = subparsers.add_parser("qindep", help="q-independence polynomial I(G, x, q)")
    _add_graph_source(p)
    _add_common(p)

    p = subparsers.add_parser("ti-brute", help="brute-force TI polynomial at a fixed q")
    p.add_argument("input", nargs="?", help="matrix-space file, or graph file with --graphical")
    p.add_argument("--named", help="catalog graph name (implies --graphical)")
    p.add_argument("--q", type=int)
    p.add_argument("--graphical", action="store_true", help="treat the input as a graph")
    _add_common(p)

    p = subparsers.add_parser("direct-sum", help="disjoint direct sum of two matrix spaces")
    p.add_argument("inputs", nargs=2, help="two matrix-space files")
    _add_common(p)

    p = subparsers.add_parser(
        "verify", help="cross-validate the symbolic engine against brute force"
    )
    _add_graph_source(p)
    p.add_argument("--q", type=int)
    p.add_argument("--with", dest="with_graph", help="second graph for the product checks")
    _add_common(p)

    p = subparsers.add_parser("expand", help="convert a polynomial JSON file")
    p.add_argument("input", help="polynomial JSON file")
    p.add_argument("--to", choices=[b.value for b in Basis])
    p.add_argument("--q", type=int, help="specialize q to this value")
    _add_common(p)

    p = subparsers.add_parser("rank-loci", help="rank locus counts of a matrix space")
    p.add_argument("input", nargs="?", help="matrix-space file, or graph file with --graphical")
    p.add_argument("--named", help="catalog graph name (implies --graphical)")
    p.add_argument("--q", type=int)
    p.add_argument("--graphical", action="store_true", help="treat the input as a graph")
    _add_common(p)

    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    """
    Raises:
        pydantic.ValidationError: 인자 조합 오류
    """
    if args.command == "direct-sum":
        inputs = list(args.inputs)
    else:
        inputs = [args.input] if getattr(args, "input", None) else []
    return RunConfig(
        command=args.command,
        inputs=inputs,
        named=getattr(args, "named", None),
        catalog=args.catalog,
        q=getattr(args, "q", None),
        format=args.format,
        guard_limit=args.guard_limit,
        graphical=getattr(args, "graphical", False),
        out=args.out,
        with_graph=getattr(args, "with_graph", None),
        to=getattr(args, "to", None),
        workers=args.workers,
        verbose=args.verbose,
    )


def setup_logging(verbose: int) -> None:
    if verbose >= 2:
        level = logging.DEBUG
    elif verbose == 1:
        level = logging.INFO
    else:
        level = getattr(logging, settings.log_level.upper(), logging.WARNING)
    logging.basicConfig(
        level=level,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
    )


# ========== 명령 ==========

def _load_graph(config: RunConfig) -> Tuple[Graph, str]:
    """(그래프, 보고서 label)."""
    if config.named is not None:
        catalog = GraphCatalog.from_yaml(config.catalog) if config.catalog else GraphCatalog()
        return catalog.get(config.named), config.named
    path = config.inputs[0]
    return read_graph(path), Path(path).stem


def _load_space(config: RunConfig) -> AltSpace:
    if config.uses_graph:
        G, _ = _load_graph(config)
        return graphical_space(G, field_make(config.q))
    S = read_altspace(config.inputs[0])
    if config.q is not None and config.q != S.field.q:
        raise BadArgs(f"{config.inputs[0]} is over F_{S.field.q} but --q {config.q} was given")
    return S


def _oracle(config: RunConfig) -> IsotropicSubspaceOracle:
    return IsotropicSubspaceOracle(guard_limit=config.guard_limit, workers=config.workers)


def _cmd_verify(config: RunConfig) -> Tuple[int, str]:
    G, label = _load_graph(config)
    if config.with_graph is not None:
        H, h_label = read_graph(config.with_graph), Path(config.with_graph).stem
    else:
        H, h_label = empty_graph(1), "K1"
    field = field_make(config.q)

    reports = [
        cross_validate(
            G, config.q, label=label, guard_limit=config.guard_limit, workers=config.workers
        ),
        direct_sum_check(
            graphical_space(G, field),
            graphical_space(H, field),
            label=f"TI({label} + {h_label})",
            guard_limit=config.guard_limit,
            workers=config.workers,
        ),
        product_check(G, H, label=f"I({label} + {h_label})"),
    ]
    passed = all(r.passed for r in reports)
    if config.format == OutputFormatEnum.JSON:
        body = json.dumps(
            {"passed": passed, "reports": [r.to_dict() for r in reports]}, indent=2
        )
    else:
        body = "\n".join(r.summary() for r in reports)
        body += "\nPASS" if passed else "\nFAIL"
    if not passed:
        for r in reports:
            for d in r.discrepancies:
                logger.warning(f"{r.label}: {d}")
    return (EXIT_OK if passed else EXIT_VERIFY_FAILED), body


def _cmd_expand(config: RunConfig) -> str:
    poly = loads_json(Path(config.inputs[0]).read_text(encoding="utf-8"))
    if config.q is not None:
        poly = specialize_q(poly, config.q)
    if config.to == Basis.MONOMIAL:
        poly = to_monomial(poly)
    elif config.to == Basis.XQ:
        poly = from_monomial(poly, q_value=config.q)
    return render(poly, config.format.value)


def _cmd_rank_loci(config: RunConfig) -> str:
    S = _load_space(config)
    counts = _oracle(config).rank_locus_counts(S)
    if config.format == OutputFormatEnum.JSON:
        return json.dumps({"n": S.n, "q": S.field.q, "counts": list(counts)})
    return "\n".join(f"{e} {c}" for e, c in enumerate(counts))


def _dispatch(config: RunConfig) -> Tuple[int, Optional[str]]:
    cmd = config.command
    fmt = config.format.value
    if cmd == CommandEnum.INDEP:
        G, _ = _load_graph(config)
        return EXIT_OK, render(independence_polynomial(G), fmt)
    if cmd == CommandEnum.QINDEP:
        G, _ = _load_graph(config)
        return EXIT_OK, render(QIndependenceEngine().polynomial(G).to_xq_poly(), fmt)
    if cmd == CommandEnum.TI_BRUTE:
        return EXIT_OK, render(_oracle(config).polynomial(_load_space(config)), fmt)
    if cmd == CommandEnum.DIRECT_SUM:
        B, C = (read_altspace(p) for p in config.inputs)
        S = direct_sum(B, C)
        if config.out:
            write_altspace(S, config.out)
            return EXIT_OK, None
        return EXIT_OK, format_altspace(S).rstrip("\n")
    if cmd == CommandEnum.VERIFY:
        return _cmd_verify(config)
    if cmd == CommandEnum.EXPAND:
        return EXIT_OK, _cmd_expand(config)
    return EXIT_OK, _cmd_rank_loci(config)


def run(config: RunConfig, stream: Optional[TextIO] = None) -> int:
    """
    설정된 명령 실행.

    결과는 모든 계산이 끝난 뒤 한 번에 기록됩니다 (--out 또는 stream).

    Returns:
        종료 코드
    """
    stream = stream if stream is not None else sys.stdout
    try:
        status, body = _dispatch(config)
    except TooLarge as e:
        logger.error(str(e))
        print(f"error: {e}", file=sys.stderr)
        return EXIT_TOO_LARGE
    except VerificationError as e:
        logger.error(str(e))
        print(f"error: {e}", file=sys.stderr)
        return EXIT_VERIFY_FAILED
    except (IsotropicPolyError, ValidationError, OSError, KeyError, ImportError) as e:
        logger.error(str(e))
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR

    if body is None:
        return status
    text = body + "\n"
    if config.out:
        Path(config.out).write_text(text, encoding="utf-8")
    else:
        stream.write(text)
    return status


def main(argv: Optional[List[str]] = None) -> int:
    """CLI 진입점."""
    args = build_parser().parse_args(argv)
    setup_logging(args.verbose)
    try:
        config = config_from_args(args)
    except ValidationError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
