import importlib.metadata

try:
    __version__ = importlib.metadata.version("nhbath")
except importlib.metadata.PackageNotFoundError:
    # running from a source tree without an install
    __version__ = "0+unknown"
