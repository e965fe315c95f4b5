from __future__ import annotations

import os
from functools import lru_cache

from dotenv import load_dotenv
from pydantic_settings import BaseSettings

ENV_FILE = os.path.join(os.path.dirname(__file__), "..", ".env")


class Settings(BaseSettings):
    budget: int = 20000  # search nodes
    length_slack: int = 8  # length cap = 2 * max(initial lengths) + slack
    crossing_cap: int = 24
    log_level: str = "WARNING"
    host: str = "0.0.0.0"
    port: int = 8015

    class Config:
        env_prefix = "TANGLEKIT_"
        case_sensitive = False


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    load_dotenv(dotenv_path=ENV_FILE)
    return Settings(_env_file=ENV_FILE)
