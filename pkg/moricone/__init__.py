"""Exact polyhedral cones for the birational geometry of varieties.

The top level `moricone` namespace exports all the models from
`moricone.models` together with the cone engine, the chamber
decomposition tools, the twin checks, the monomial systems and the
built-in models. Exact linear algebra lives in `moricone.arith`, file
handling in `moricone.io` and plotting in `moricone.plot`.

Attributes:
    __version__: Version of the installed moricone.py library.
"""

# must be defined before setup.py imports the package
__version__ = "0.1.0"

# preserve order:
from .errors import *  # 1
from .cone import *  # 2
from .models import *  # 3

from .fan import *  # 4.1
from .lefschetz import *  # 4.2
from .monomial import *  # 4.3

from .zoo import *  # 5
