import sys

from boolskel.cli import main

sys.exit(main())
