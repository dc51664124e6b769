from majca.utils.config import Settings, settings
from majca.utils.logger import setup_logging

__all__ = ["Settings", "settings", "setup_logging"]
