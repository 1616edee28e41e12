import sys

from addspec.cli import run

sys.exit(run(sys.argv[1:]))
