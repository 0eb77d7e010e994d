"""
CLI Run Configuration.

Pydantic 모델로 명령행 인자와 settings를 병합한 실행 설정을 검증합니다.

검증 규칙:
- ti-brute, verify: --q 필수
- rank-loci: 그래프 입력(--graphical / --named)이면 --q 필수
- --q 는 지원 field order 여야 함 (expand 의 --q 는 특수화 값이므로 예외)
- 명령별 입력 개수
"""

from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, Field, model_validator

from ..field.gfq import SUPPORTED_ORDERS
from ..poly.bivariate import Basis


class CommandEnum(str, Enum):
    INDEP = "indep"
    QINDEP = "qindep"
    TI_BRUTE = "ti-brute"
    DIRECT_SUM = "direct-sum"
    VERIFY = "verify"
    EXPAND = "expand"
    RANK_LOCI = "rank-loci"


class OutputFormatEnum(str, Enum):
    TEXT = "text"
    JSON = "json"
    LATEX = "latex"


# 그래프 하나를 입력으로 받는 명령
GRAPH_COMMANDS = {CommandEnum.INDEP, CommandEnum.QINDEP, CommandEnum.VERIFY}


class RunConfig(BaseModel):
    """
    한 번의 CLI 실행 설정.
    """
    command: CommandEnum
    inputs: List[str] = Field(default_factory=list, description="입력 파일 경로")
    named: Optional[str] = Field(None, description="카탈로그 그래프 이름")
    catalog: Optional[str] = Field(None, description="카탈로그 YAML 경로")
    q: Optional[int] = Field(None, description="field order 또는 특수화 값")
    format: OutputFormatEnum = Field(OutputFormatEnum.TEXT)
    guard_limit: Optional[int] = Field(None, ge=1)
    graphical: bool = Field(False, description="그래프 파일을 B_G 로 취급")
    out: Optional[str] = Field(None, description="출력 파일 경로")
    with_graph: Optional[str] = Field(None, description="verify 곱 검사용 두 번째 그래프 파일")
    to: Optional[Basis] = Field(None, description="expand 대상 basis")
    workers: Optional[int] = Field(None, ge=1)
    verbose: int = Field(0, ge=0)

    @property
    def uses_graph(self) -> bool:
        return (
            self.command in GRAPH_COMMANDS
            or self.named is not None
            or (self.command in (CommandEnum.TI_BRUTE, CommandEnum.RANK_LOCI) and self.graphical)
        )

    @model_validator(mode="after")
    def _check(self) -> "RunConfig":
        cmd = self.command

        # 1. 입력 개수
        if cmd == CommandEnum.DIRECT_SUM:
            if len(self.inputs) != 2 or self.named is not None:
                raise ValueError("direct-sum needs exactly two matrix-space files")
        elif cmd == CommandEnum.EXPAND:
            if len(self.inputs) != 1:
                raise ValueError("expand needs exactly one polynomial file")
        else:
            sources = len(self.inputs) + (1 if self.named is not None else 0)
            if sources != 1:
                raise ValueError(f"{cmd.value} needs exactly one input (a file or --named)")

        # 2. q 필수 여부
        needs_q = cmd in (CommandEnum.TI_BRUTE, CommandEnum.VERIFY) or (
            cmd == CommandEnum.RANK_LOCI and self.uses_graph
        )
        if needs_q and self.q is None:
            raise ValueError(f"{cmd.value} requires --q")

        # 3. q 지원 여부
        if self.q is not None and cmd != CommandEnum.EXPAND and self.q not in SUPPORTED_ORDERS:
            raise ValueError(f"q={self.q} is not in the supported set {list(SUPPORTED_ORDERS)}")

        if self.with_graph is not None and cmd != CommandEnum.VERIFY:
            raise ValueError("--with is only meaningful for verify")
        return self
