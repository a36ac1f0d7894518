"""
Application configuration using Pydantic Settings.
"""
from functools import lru_cache
from typing import Tuple

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Settings loaded from MATCHDIM_* environment variables (or .env)."""

    model_config = SettingsConfigDict(
        env_prefix="MATCHDIM_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
    )

    # Exhaustive oracle refuses graphs above this many vertices
    oracle_cap: int = 12

    # Logging
    log_level: str = "WARNING"

    # Worker processes for the theorem sweep
    default_jobs: int = 1

    # Frozen corpora for the acceptance suites
    oracle_corpus_seed: int = 20240601
    oracle_corpus_size: int = 500
    suspension_corpus_seed: int = 1303
    suspension_corpus_size: int = 200
    pendant_corpus_seed: int = 1701
    pendant_corpus_size: int = 100
    union_corpus_seed: int = 1808
    union_corpus_size: int = 100
    lemma_seed: int = 42
    corpus_max_n: int = 9
    corpus_edge_probabilities: Tuple[float, ...] = (0.2, 0.5, 0.8)


@lru_cache
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()
