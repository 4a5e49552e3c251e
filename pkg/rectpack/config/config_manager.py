import os
import yaml
from typing import Any, Optional

from rectpack.utils import get_from_env


class ConfigManager:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __init__(self):
        if not hasattr(self, 'config'):
            # Configuration file lives next to this module: rectpack/config/config.yaml
            self.config_path = os.path.join(
                os.path.dirname(__file__),
                'config.yaml'
            )
            self.load_config()

    def load_config(self):
        """Load configuration from yaml file"""
        if not os.path.exists(self.config_path):
            raise FileNotFoundError(f"Config file not found at {self.config_path}")

        with open(self.config_path, 'r') as f:
            self.config = yaml.safe_load(f)

    def refresh(self):
        """Reload configuration from file"""
        self.load_config()

    def get(self, section: str, key: str, default: Any = None) -> Any:
        """Get a single value, falling back to ``default`` when it is missing"""
        return self.config.get(section, {}).get(key, default)

    def get_lp_config(self) -> dict:
        """Get LP solver configuration"""
        return self.config.get("lp", {})

    def get_oracle_config(self) -> dict:
        """Get brute-force oracle caps"""
        return self.config.get("oracles", {})

    def get_render_config(self) -> dict:
        """Get SVG rendering configuration"""
        return self.config.get("render", {})

    def get_bench_config(self) -> dict:
        """Get acceptance suite trial counts"""
        return self.config.get("bench", {})

    def get_log_mode(self) -> str:
        return self.config.get("logging", {}).get("log_mode", "console")

    def get_max_workers(self) -> int:
        """Worker cap: RECTPACK_THREADS first, then config.yaml"""
        default = self.config.get("workers", {}).get("max_workers", 1)
        value = get_from_env("RECTPACK_THREADS", default=str(default))
        try:
            return max(1, int(value))
        except ValueError:
            return max(1, int(default))


# Global config instance
config = ConfigManager()
