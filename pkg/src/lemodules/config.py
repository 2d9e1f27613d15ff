import os


LOG_LEVEL = os.getenv("LEMODULES_LOG_LEVEL", "INFO").upper()

# enumeration above this degree is exponential in practice; we only warn
MAX_ENUMERATION_DEGREE = int(os.getenv("LEMODULES_MAX_ENUMERATION_DEGREE", "24"))

MAX_SWEEP = int(os.getenv("LEMODULES_MAX_SWEEP", "64"))
