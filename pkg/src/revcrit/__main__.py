import sys

from revcrit.cli import main

sys.exit(main())
