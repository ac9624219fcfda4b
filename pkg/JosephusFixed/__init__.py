AUTHOR = "Plaraje (DMAM2) plaraje@proton.me"
MAIL = "plaraje@proton.me"
VERSION = "0.2.0"

from . import Errors
from . import Logger
from . import Josephus
from . import FracBase
from . import FixedPoints
from . import Congruence
from . import Golden
from . import Verify
from . import Table
from . import Input
