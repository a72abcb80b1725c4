#!/usr/bin/env python3
"""Run every verification suite at its full acceptance bounds and write the
reports as canonical JSON files.

Usage: python3 scripts/run_surveys.py [output_dir]

Exit code 0 when every suite passes, 1 when any mathematical check fails
(the finding payloads are in the written reports).
"""

import json
import pathlib
import sys
import time

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from nilpair import surveys  # noqa: E402
from nilpair.cli import canonical_json  # noqa: E402


def main():
    out_dir = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "reports")
    out_dir.mkdir(parents=True, exist_ok=True)
    jobs = [
        ("structure", lambda: surveys.structure_suite(8)),
        ("skew", lambda: surveys.skew_suite(7)),
        ("cohomology", lambda: surveys.cohomology_suite(8)),
        ("multiplicity", lambda: surveys.multiplicity_suite(6)),
        ("harmonics", lambda: surveys.harmonics_suite(5, common_bound=8)),
        ("rectangular", lambda: surveys.rect_suite(dim_bound=20)),
        ("strictness", surveys.strictness_witness),
    ]
    all_ok = True
    for name, run in jobs:
        t0 = time.time()
        report = run()
        ok = report.get("ok", report.get("witness", False))
        all_ok = all_ok and ok
        path = out_dir / f"{name}.json"
        path.write_text(canonical_json(report))
        print(f"{'PASS' if ok else 'FAIL'} {name:13s} {time.time() - t0:6.1f}s -> {path}")
        if name == "multiplicity" and report.get("findings"):
            for f in report["findings"]:
                tag = "in-scope" if f["in_ne_cone"] else "out-of-scope"
                print(
                    f"       finding ({tag}): diagram {f['diagram']}, "
                    f"highest weight {f['lambda']}, {len(f['rows'])} weight(s)"
                )
    return 0 if all_ok else 1


if __name__ == "__main__":
    sys.exit(main())
