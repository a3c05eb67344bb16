"""Configuration management for kitecolor."""

from pathlib import Path

from pydantic import Field
from pydantic_settings import BaseSettings, PydanticBaseSettingsSource, SettingsConfigDict

from ..core.domain.generation import OracleBudget


class Settings(BaseSettings):
    """Runtime settings.

    Values come only from constructor arguments and the defaults below.
    Environment variables and dotenv files are not read; the CLI passes its
    flags in explicitly.
    """

    model_config = SettingsConfigDict(extra="ignore", frozen=True)

    # Logging
    log_level: str = "WARNING"
    log_json: bool = False
    log_file: Path | None = None
    debug: bool = False

    # Coloring
    strict_checks: bool = True
    rescue_oracle: bool = False
    edge_base_case_edges: int = Field(default=7, ge=0)

    # Oracle
    oracle_max_elements: int = Field(default=30, gt=0)
    oracle_max_nodes: int = Field(default=200_000, gt=0)

    # Generator
    generator_max_attempts: int = Field(default=4, ge=1)

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: type[BaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> tuple[PydanticBaseSettingsSource, ...]:
        return (init_settings,)

    def oracle_budget(self) -> OracleBudget:
        """Budget for exhaustive searches built from the oracle settings."""
        return OracleBudget(
            max_elements=self.oracle_max_elements,
            max_nodes=self.oracle_max_nodes,
        )


# Global settings instance
settings = Settings()
