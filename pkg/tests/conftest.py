import sys
from pathlib import Path

# make sibling helper modules (reference_model) importable from any rootdir
sys.path.insert(0, str(Path(__file__).parent))
