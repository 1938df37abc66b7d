#!/usr/bin/env python3
"""Full verification sweep over every family, with the known hexagonal
discrepancies allowlisted. Writes a JSON report; each mismatch line shows
the printed value next to the value measured on the graph.

    python scripts/verify_all.py [report.json]
"""

import sys

from netindex.cli import main

report = sys.argv[1] if len(sys.argv) > 1 else "verification_report.json"
sys.exit(
    main([
        "verify",
        "--n-range", "1..25",
        "--c", "1,2,3",
        "--alpha", "1,2,3,0.5",
        "--expect-mismatch", "pi2,pi1star,chi",
        "--out", report,
    ])
)
