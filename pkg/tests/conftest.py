import sys
from pathlib import Path

# make `import oracles` work regardless of how pytest inserts rootdir
sys.path.insert(0, str(Path(__file__).parent))
