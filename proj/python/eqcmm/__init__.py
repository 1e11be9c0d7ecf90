from ._eqcmm import *  # noqa: F401,F403
from ._eqcmm import __doc__, __version__  # noqa: F401
