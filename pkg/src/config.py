import os

from dotenv import load_dotenv
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

# Get the project root directory (parent of src)
BASE_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))

load_dotenv(os.path.join(BASE_DIR, ".env"))


class Settings(BaseSettings):
    model_config = SettingsConfigDict(env_prefix="HOMODEC_", extra="ignore")

    threads: int = Field(default=1, ge=1)
    log_level: str = "WARNING"

    # Size guards of the brute-force oracle and exhaustive checkers
    oracle_max_n: int = 20
    exhaustive_max_n: int = 12

    submodular_samples: int = 10_000
    seed: int = 0

    host: str = "0.0.0.0"
    port: int = Field(default_factory=lambda: int(os.getenv("PORT", 8000)))


settings = Settings()
