"""
Runtime settings for icx.
Values come from ICX_* environment variables or a local .env file.
"""
from functools import lru_cache
from typing import Optional

from pydantic_settings import BaseSettings, SettingsConfigDict

from constants import (
    DEFAULT_CLIQUE_BUDGET,
    DEFAULT_DECODE_TRIALS,
    DEFAULT_DENOMINATOR_CAP,
    DEFAULT_DEPTH_CAP,
    DEFAULT_MAIS_LIMIT,
    DEFAULT_MINRANK_BUDGET,
    DEFAULT_NODE_ATTEMPTS,
    DEFAULT_ORACLE_LIMIT,
    DEFAULT_PATH_BUDGET,
    DEFAULT_PRIME_ROUNDS,
    FULL_FAMILY_MAX_N,
    MAX_VERTICES,
    RESTRICTED_SUBSET_SIZE,
)


class Settings(BaseSettings):
    model_config = SettingsConfigDict(env_prefix="ICX_", env_file=".env", extra="ignore")

    oracle_limit: int = DEFAULT_ORACLE_LIMIT
    mais_limit: int = DEFAULT_MAIS_LIMIT
    minrank_budget: int = DEFAULT_MINRANK_BUDGET
    clique_budget: int = DEFAULT_CLIQUE_BUDGET
    path_budget: int = DEFAULT_PATH_BUDGET
    max_vertices: int = MAX_VERTICES

    full_family_max_n: int = FULL_FAMILY_MAX_N
    restricted_subset_size: int = RESTRICTED_SUBSET_SIZE
    depth_cap: int = DEFAULT_DEPTH_CAP

    denominator_cap: int = DEFAULT_DENOMINATOR_CAP
    prime_rounds: int = DEFAULT_PRIME_ROUNDS
    node_attempts: int = DEFAULT_NODE_ATTEMPTS
    decode_trials: int = DEFAULT_DECODE_TRIALS

    log_level: str = "INFO"
    log_file: Optional[str] = None


@lru_cache
def get_settings() -> Settings:
    """Return the process-wide settings (read once)."""
    return Settings()
