import sys

from sincpow.cli import main

sys.exit(main())
