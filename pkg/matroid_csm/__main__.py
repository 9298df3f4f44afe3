import sys

from matroid_csm.main import main

sys.exit(main())
