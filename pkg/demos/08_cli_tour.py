"""
Command-line tour
=================

Every subcommand, driven through ``heckeposet.cli.main``.
"""

# %%
import json
import tempfile
from pathlib import Path

from heckeposet.cli import main

main(["expand", "--family", "dimm", "--alpha", "2,1,2"])
main(["expand", "--family", "qs", "--alpha", "2,1,2", "--basis", "F"])

# %%
with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "running.json"
    path.write_text(json.dumps({"n": 5, "covers": [[5, 1], [1, 3], [1, 4], [2, 4]]}))
    main(["hasse", "--covers-file", str(path)])
    main(["poset", "--covers-file", str(path), "--format", "tsv"])

# %%
main(["interval", "--sigma", "25134", "--rho", "52143", "--format", "tsv"])
main(["build-d", "--alpha", "1,1,2,2,1,1,1", "--rho", "841539762", "--format", "tsv"])
main(["sink-tableau", "--tableau", "3 2/6 5 4/7 1/11 10 9 8", "--format", "tsv"])
main(["verify", "--suite", "relations", "--n", "3"])
