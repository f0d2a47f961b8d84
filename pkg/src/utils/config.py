"""Configuration management for vclab."""

from functools import lru_cache

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Operational settings; every field has a default."""

    model_config = SettingsConfigDict(
        env_prefix="VCLAB_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    log_level: str = Field("WARNING")
    max_workers: int = Field(4, ge=1)


# Closed-form integration and the quadrature oracle
INTEGRATION = {
    "degenerate_threshold": 1e-8,   # ã²+b̃² at or below this is the degenerate branch
    "max_exponent": 700.0,          # e^{ãτ} beyond this overflows a double
    "series_margin": 1.0,           # series when |z|τ < K + series_margin
    "series_max_terms": 400,
    "quad_rel_tol": 1e-10,
    "quad_abs_tol": 1e-13,
    "quad_limit": 200,
    "max_rel_tol": 1e-2,
}

# Indicator-control oscillator construction
SECTION7 = {
    "max_k": 8,
    "guard": 1e3,
}

# Rank-k search over the h-transform
RANK_SEARCH = {
    "range": (-10.0, 10.0),
    "attempts": 1000,
    "cond_threshold": 1e8,
}

# Linear solves inside the constructions
INTERPOLATION = {
    "residual_tol": 1e-8,
    "positive_target": 1.0,
}

# PAC experiment defaults
LEARNING = {
    "sizes": [10, 30, 100, 300],
    "trials": 20,
    "test_size": 10_000,
    "budget": 400,
    "control_half_width": 1.0,
    "proposal_radius": 0.999,
    "delta": 0.05,
    "z_score": 1.959963984540054,
}

# Self-test suite
SELFTEST = {
    "oracle_cases": 1000,
    "max_power": 6,
    "max_rate": 5.0,
    "taus": (1.0, 2.0),
    "abs_tol": 1e-8,
    "rel_tol": 1e-6,
    "section7_max_k": 6,
    "seed": 20240611,
}


@lru_cache
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()
