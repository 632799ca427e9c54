import sys

from mgcount.cli import main

sys.exit(main())
