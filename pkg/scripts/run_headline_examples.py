#!/usr/bin/env python3
"""Run the committed example problems and write their reports.

Produces, under out/: a human-readable report, canonical JSON, and (for
the 2-D quotients) the labeled moment-polytope figure for each problem
file in problems/.
"""

import io
import sys
from contextlib import redirect_stdout
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from toricgit.cli import cmd_quotient, parse_problem  # noqa: E402
from toricgit.quotient import DEFAULT_DEGREE_BOUND  # noqa: E402


def main() -> int:
    out_dir = ROOT / "out"
    out_dir.mkdir(exist_ok=True)
    for path in sorted((ROOT / "problems").glob("*.json")):
        problem = parse_problem(path)
        stem = path.stem
        json_path = out_dir / f"{stem}.report.json"
        svg_path = out_dir / f"{stem}.svg"
        buffer = io.StringIO()
        try:
            with redirect_stdout(buffer):
                cmd_quotient(
                    problem,
                    problem["degree_bound"] or DEFAULT_DEGREE_BOUND,
                    problem["mode"],
                    sys.stdout,
                    json_path=str(json_path),
                    svg_path=str(svg_path),
                )
            wrote_svg = True
        except Exception:
            with redirect_stdout(buffer):
                buffer.truncate(0)
                buffer.seek(0)
                cmd_quotient(
                    problem,
                    problem["degree_bound"] or DEFAULT_DEGREE_BOUND,
                    problem["mode"],
                    sys.stdout,
                    json_path=str(json_path),
                )
            wrote_svg = False
        (out_dir / f"{stem}.report.txt").write_text(buffer.getvalue())
        print(f"{stem}: report + json" + (" + svg" if wrote_svg else ""))
    return 0


if __name__ == "__main__":
    sys.exit(main())
