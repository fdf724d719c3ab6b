from matspec._defaults import _Defaults as Defaults
from .version import __version__
