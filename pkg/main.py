"""
Zassenhaus Counterexample Verifier - Main Entry Point
Dispatches to the command line interface in src/reporting
"""

import sys
from pathlib import Path

# Add src to path
sys.path.insert(0, str(Path(__file__).parent / 'src'))

from reporting import main

if __name__ == "__main__":
    sys.exit(main())
