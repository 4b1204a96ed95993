# src/qofc_cluster/__main__.py
import sys

from adapters.inbound.cli.main import main

sys.exit(main())
