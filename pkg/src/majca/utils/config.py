from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    # Logging Configuration
    log_level: str = "WARNING"
    json_logs: bool = False

    # Brute-force Scan Configuration
    workers: int = 0  # Number of worker processes, 0 means os.cpu_count()
    chunk_bits: int = 20  # Each worker chunk holds 2**chunk_bits configurations
    bruteforce_max_n: int = 26  # Largest ring size the exhaustive scan accepts

    # Pattern Generator Configuration
    pattern_max_radius: int = 3  # Composition search is only tractable up to here

    # Verification Configuration
    default_seed: int = 0

    model_config = SettingsConfigDict(env_prefix="MAJCA_", extra="ignore")


settings = Settings()
