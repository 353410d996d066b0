import sys

from wheelpinv.cli import main

sys.exit(main())
