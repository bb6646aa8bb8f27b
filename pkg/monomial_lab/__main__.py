import sys

from monomial_lab.cli import main

sys.exit(main())
