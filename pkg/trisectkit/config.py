import os
from pathlib import Path


BASE_DIR = Path(__file__).resolve().parent.parent
PACKS_DIR = Path(os.getenv("TRISECTKIT_PACKS_DIR", str(BASE_DIR / "packs")))

FORMAT_VERSION = "1"
COORDINATE_MAGNITUDE_CAP = int(os.getenv("TRISECTKIT_MAGNITUDE_CAP", "1000000"))
GENUS_SCAN_CAP = int(os.getenv("TRISECTKIT_GENUS_SCAN_CAP", "16"))

LOG_LEVEL = os.getenv("TRISECTKIT_LOG_LEVEL", "WARNING")
LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_INCONCLUSIVE = 2
EXIT_USAGE = 64
EXIT_IO = 74
