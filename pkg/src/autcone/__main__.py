import sys

from autcone.cli import main

sys.exit(main())
