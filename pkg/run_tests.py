#!/usr/bin/env python3
"""
Test Runner
- Pins the ZASSENHAUS_* variables so a local .env cannot change results
- Extra arguments are passed to pytest, e.g. `run_tests.py tests/test_zassenhaus.py -k search`
"""

import os
import subprocess
import sys
from pathlib import Path

ROOT = Path(__file__).parent

PINNED_ENV = {
    'ZASSENHAUS_LOG_LEVEL': 'WARNING',
    'ZASSENHAUS_RANDOM_SEED': '2019',
    'ZASSENHAUS_MAX_FIELD_ORDER': '10000000',
    'ZASSENHAUS_METRICS_FILE': '',
}


def run_tests(pytest_args) -> int:
    env = {**os.environ, 'PYTHONPATH': str(ROOT / 'src'), **PINNED_ENV}
    args = pytest_args or ['tests/']
    print("🧪 Zassenhaus verifier tests:", " ".join(args))
    try:
        code = subprocess.run([sys.executable, '-m', 'pytest', *args, '--tb=short', '--no-header'],
                              env=env, cwd=ROOT).returncode
    except OSError as e:
        print(f"❌ Could not start pytest: {e}")
        return 1
    print("✅ All tests passed" if code == 0 else f"❌ pytest exited with {code}")
    return code


if __name__ == "__main__":
    sys.exit(run_tests(sys.argv[1:]))
