import sys

from lcderham.cli import main

sys.exit(main())
