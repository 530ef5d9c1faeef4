import sys

from cauchon.cli import main

sys.exit(main())
