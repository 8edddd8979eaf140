from ._gitstrata import *  # noqa: F401,F403
from ._gitstrata import __version__  # noqa: F401
