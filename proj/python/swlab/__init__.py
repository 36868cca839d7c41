from ._swlab import *  # noqa: F401,F403
