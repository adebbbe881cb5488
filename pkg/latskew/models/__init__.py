from .lattice import *
from .vectors import *
from .samples import *
from .geometry import *
from .orbits import *
from .stats import *
from .series import *
from .config import *
from .documents import *
