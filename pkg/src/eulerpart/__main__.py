import sys

from eulerpart.cli import main

sys.exit(main())
