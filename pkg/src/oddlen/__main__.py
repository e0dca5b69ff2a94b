from oddlen.cli import main
import sys

sys.exit(main())
