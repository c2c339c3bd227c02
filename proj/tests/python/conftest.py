import sys
from pathlib import Path

# Prefer an installed wheel; fall back to the in-tree package, which holds
# the CMake-built extension when FASKL_BUILD_PYTHON=ON.
try:
    import faskl  # noqa: F401
except ImportError:
    sys.path.insert(0, str(Path(__file__).resolve().parents[2] / "python"))
