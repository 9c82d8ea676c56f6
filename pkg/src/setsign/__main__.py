import sys

from setsign.cli import main

sys.exit(main())
