from .main import main  # noqa
from .version import __version__  # noqa
