import sys
from pathlib import Path

# make the shared test-side reference implementations importable
sys.path.insert(0, str(Path(__file__).resolve().parent))
