from .main import main
from .run import run
from .validate import validate
from .presets import presets

__all__ = ["main", "run", "validate", "presets"]
