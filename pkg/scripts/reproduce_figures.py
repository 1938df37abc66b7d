#!/usr/bin/env python3
"""Write the comparison CSV and SVG (alpha = c = 2, n = 2..12, all families).

    python scripts/reproduce_figures.py [outdir]
"""

import sys
from pathlib import Path

from netindex.cli import main

out = Path(sys.argv[1] if len(sys.argv) > 1 else "figures")
out.mkdir(parents=True, exist_ok=True)
csv_path, svg_path = out / "sweep.csv", out / "comparison.svg"
code = main(["sweep", "--n-range", "2..12", "--c", "2", "--alpha", "2", "--csv", str(csv_path)])
code = code or main(["plot", "--csv", str(csv_path), "--svg", str(svg_path)])
print(f"wrote {csv_path} and {svg_path}")
sys.exit(code)
