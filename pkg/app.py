"""
trispin - command-line entry point

Usage:
    python app.py satake weights 12 12 12
    python app.py verify-triple --in triple_identity.json
    python app.py lfun euler --inline '{"constant": ["1"]}' --s 2 --cutoff 1000
"""
import sys
from pathlib import Path

# Add src to path
sys.path.append(str(Path(__file__).parent))

from src.cli.commands import main


if __name__ == "__main__":
    sys.exit(main())
