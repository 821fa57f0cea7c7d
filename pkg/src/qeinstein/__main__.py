import sys

from qeinstein.cli import main


sys.exit(main())
