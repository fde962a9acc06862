import sys

from sepsim.cli import main

sys.exit(main())
