"""helion: spatial entanglement of helium-like S states"""

__version__ = "0.1.0"

# Import submodules to make them available at package level
from . import entropy
from . import hylleraas
from . import numerics
from . import oracle
from . import partialwave
from . import rdm
from .client import Client, init

__all__ = ["Client", "init", "entropy", "hylleraas", "numerics", "oracle", "partialwave", "rdm"]
