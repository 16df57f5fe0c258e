import sys

from gravotto.cli import main

sys.exit(main())
