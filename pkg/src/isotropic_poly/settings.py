from typing import Literal

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

__all__ = ["Settings", "settings"]


class Settings(BaseSettings):
    model_config = SettingsConfigDict(
        env_prefix="ISOPOLY_", env_file=".env", env_file_encoding="utf-8", extra="ignore"
    )

    # brute-force Grassmannian 열거 한도 (Σ_i [n choose i]_q)
    guard_limit: int = Field(default=10**8, ge=1)
    # rank locus 열거 한도 (q^n)
    rank_locus_limit: int = Field(default=10**7, ge=1)

    max_graph_vertices: int = Field(default=64, ge=0)
    workers: int = Field(default=1, ge=1)
    q_enumeration: Literal["pruned", "sweep"] = Field(default="pruned")

    log_level: str = Field(default="WARNING")


settings = Settings()
