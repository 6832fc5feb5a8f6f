# config.py
import os
from dataclasses import dataclass

from dotenv import load_dotenv

DEFAULT_MAX_ORDER = 60
DEFAULT_CORS_ORIGINS = "http://localhost:3000"


@dataclass(frozen=True)
class Settings:
    """API settings; the CLI takes everything from flags."""

    max_order: int = DEFAULT_MAX_ORDER
    cors_origins: tuple[str, ...] = (DEFAULT_CORS_ORIGINS,)
    jobs: int = 1


def _int_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        value = int(raw)
    except ValueError:
        raise RuntimeError(f"{name} must be an integer, got {raw!r}") from None
    if value < 1:
        raise RuntimeError(f"{name} must be positive, got {value}")
    return value


def load_settings() -> Settings:
    load_dotenv()
    origins = os.getenv("PASCALDET_CORS_ORIGINS", DEFAULT_CORS_ORIGINS)
    return Settings(
        max_order=_int_env("PASCALDET_MAX_ORDER", DEFAULT_MAX_ORDER),
        cors_origins=tuple(o.strip() for o in origins.split(",") if o.strip()),
        jobs=_int_env("PASCALDET_JOBS", 1),
    )
