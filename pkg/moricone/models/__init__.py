"""Python models for lattices, varieties, chamber decompositions and reports."""

from .lattice import *
from .chamber import *
from .report import *
from .variety import *
