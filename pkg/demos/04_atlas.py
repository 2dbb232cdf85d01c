"""Draw the solution set in two frames and list the sporadic dots.

Writes atlas_primed.svg and atlas_sigmatau.svg into the directory given on
the command line (default: the current directory).
"""

import sys
from pathlib import Path

from floorcomm.atlas import (
    PRIMED_WINDOW,
    SIGMATAU_WINDOW,
    enumerate_all,
    limit_sequence,
    render_svg,
    sporadic_betas,
)

out = Path(sys.argv[1] if len(sys.argv) > 1 else ".")
out.mkdir(parents=True, exist_ok=True)

for name, window in (("primed", PRIMED_WINDOW), ("sigmatau", SIGMATAU_WINDOW)):
    features = enumerate_all(window)
    (out / f"atlas_{name}.svg").write_text(render_svg(features, window))
    counts = {}
    for f in features:
        counts[f.kind] = counts.get(f.kind, 0) + 1
    print(f"{name}: {counts}")

print("sporadic beta' at alpha' = 3/2:", [str(-b) for b in sporadic_betas(2, 3, PRIMED_WINDOW)])
print("sporadic beta' at alpha' = 2/3:", [str(-b) for b in sporadic_betas(3, 2, PRIMED_WINDOW)])

seq = limit_sequence(2, 3, 1, 1, 64)
print("limit sequence:", [str(b) for b in seq[:4]], "...", seq[-1], "-> -1/2")
